// App controller: wires the setup form, the clickable board, and the live
// status panel to the JSON API.  Every user action gets a sequence number;
// responses landing after a newer action are dropped on the floor.

import { ApiError, ApiLike, GraphInfo, ReachInfo } from "./api.js";
import { paintConfig, renderBoard, shake } from "./board.js";
import { Session } from "./state.js";
import { describeLabel, describeReach, witnessText } from "./status.js";

interface Refs {
  form: HTMLFormElement;
  error: HTMLElement;
  board: HTMLElement;
  notice: HTMLElement;
  current: HTMLElement;
  target: HTMLElement;
  reach: HTMLElement;
  witness: HTMLElement;
  history: HTMLElement;
  undo: HTMLButtonElement;
}

function errText(e: unknown): string {
  if (e instanceof ApiError) return `${e.message} (HTTP ${e.status}, ${e.code})`;
  return String(e);
}

export class App {
  info: GraphInfo | null = null;
  session: Session | null = null;
  lastReach: ReachInfo | null = null;

  private seq = 0;
  private pending = new Set<Promise<unknown>>();
  private refs!: Refs;

  constructor(private root: HTMLElement, private client: ApiLike) {}

  mount(): void {
    this.root.innerHTML = `
      <form id="setup">
        <label>n <input name="n" value="4" size="3"></label>
        <label>attach <input name="attach" value="3" size="8"></label>
        <label>start <input name="from" value="1000" size="14"></label>
        <label>target <input name="target" value="0011" size="14"></label>
        <button type="submit">set up</button>
        <span id="setup-error" class="error"></span>
      </form>
      <div id="board"></div>
      <div id="notice"></div>
      <div class="panel">
        <div>current: <span id="cur-label"></span></div>
        <div>target: <span id="tgt-label"></span></div>
        <div>status: <span id="reach"></span></div>
        <div>witness: <span id="witness"></span></div>
        <div>history: <span id="history"></span>
          <button id="undo" type="button">undo</button></div>
      </div>`;
    const byId = (id: string) => this.root.querySelector(`#${id}`) as HTMLElement;
    this.refs = {
      form: byId("setup") as HTMLFormElement,
      error: byId("setup-error"),
      board: byId("board"),
      notice: byId("notice"),
      current: byId("cur-label"),
      target: byId("tgt-label"),
      reach: byId("reach"),
      witness: byId("witness"),
      history: byId("history"),
      undo: byId("undo") as HTMLButtonElement,
    };
    this.refs.form.addEventListener("submit", (e) => {
      e.preventDefault();
      const data = new FormData(this.refs.form);
      const n = Number(data.get("n"));
      const attach = String(data.get("attach") || "")
        .split(",")
        .map((s) => s.trim())
        .filter((s) => s !== "")
        .map(Number);
      void this.track(this.configure(
        n, attach, String(data.get("from")), String(data.get("target"))));
    });
    this.refs.undo.addEventListener("click", () => {
      void this.track(this.undo());
    });
  }

  // Drain until a whole timer turn passes with no request in flight, so all
  // follow-up refreshes kicked off by an action are included.
  async settle(): Promise<void> {
    for (;;) {
      while (this.pending.size) await Promise.allSettled([...this.pending]);
      await new Promise((r) => setTimeout(r, 0));
      if (this.pending.size === 0) return;
    }
  }

  private track<T>(p: Promise<T>): Promise<T> {
    this.pending.add(p);
    const drop = () => this.pending.delete(p);
    p.then(drop, drop);
    return p;
  }

  async configure(n: number, attach: number[], initial: string, target: string): Promise<void> {
    const seq = ++this.seq;
    try {
      const info = await this.track(this.client.graphInfo(n, attach));
      const ref = { n: info.n, attach: info.attach };
      // classify both configs before rendering so bad input never half-applies
      const [cur, tgt, reach] = await this.track(Promise.all([
        this.client.classify(ref, initial),
        this.client.classify(ref, target),
        this.client.reach(ref, initial, target),
      ]));
      if (seq !== this.seq) return;
      this.info = info;
      this.session = new Session(ref, initial, target);
      this.lastReach = reach;
      renderBoard(this.refs.board, info, initial, (v) => {
        void this.track(this.clickVertex(v));
      });
      this.refs.error.textContent = "";
      this.refs.notice.textContent = "";
      this.refs.current.textContent = `${initial} (${describeLabel(cur)})`;
      this.refs.target.textContent = `${target} (${describeLabel(tgt)})`;
      this.refs.reach.textContent = describeReach(reach);
      this.refs.witness.textContent = witnessText(reach);
      this.renderHistory();
    } catch (e) {
      if (seq !== this.seq) return;
      this.refs.error.textContent = errText(e);
    }
  }

  async clickVertex(v: number): Promise<void> {
    const s = this.session;
    if (!s) return;
    const seq = ++this.seq;
    try {
      const after = await this.track(this.client.move(s.graph, s.config, v));
      if (seq !== this.seq) return;
      s.applyMove(v, after);
      paintConfig(this.refs.board, after);
      this.renderHistory();
      this.refs.notice.textContent = "";
    } catch (e) {
      if (seq !== this.seq) return;
      if (e instanceof ApiError && e.status === 409) {
        shake(this.refs.board, v);
        const friendly = s.config.indexOf("1") < 0
          ? "no legal move: every vertex is white"
          : `s${v} is white, so it cannot move`;
        this.refs.notice.textContent = `${friendly}; server said "${e.message}" (HTTP 409)`;
      } else {
        this.refs.notice.textContent = errText(e);
      }
      return; // board unchanged, status still valid
    }
    await this.refreshStatus(seq);
  }

  async undo(): Promise<void> {
    const s = this.session;
    if (!s) return;
    const seq = ++this.seq;
    if (!s.undo()) return;
    paintConfig(this.refs.board, s.config);
    this.renderHistory();
    this.refs.notice.textContent = "";
    await this.refreshStatus(seq);
  }

  private async refreshStatus(seq: number): Promise<void> {
    const s = this.session;
    if (!s) return;
    try {
      const [cur, tgt, reach] = await this.track(Promise.all([
        this.client.classify(s.graph, s.config),
        this.client.classify(s.graph, s.target),
        this.client.reach(s.graph, s.config, s.target),
      ]));
      if (seq !== this.seq) return;
      this.lastReach = reach;
      this.refs.current.textContent = `${s.config} (${describeLabel(cur)})`;
      this.refs.target.textContent = `${s.target} (${describeLabel(tgt)})`;
      this.refs.reach.textContent = describeReach(reach);
      this.refs.witness.textContent = witnessText(reach);
    } catch (e) {
      if (seq !== this.seq) return;
      this.refs.reach.textContent = errText(e);
    }
  }

  private renderHistory(): void {
    const s = this.session;
    this.refs.history.textContent = s && s.history.length
      ? s.moves().map((v) => `s${v}`).join(" ")
      : "(none)";
  }
}
