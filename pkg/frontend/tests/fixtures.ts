// Shared test doubles: a canned GraphInfo for the 4-path and a stub API that
// mimics the server's strict-move rule (the stub plays the server's role, so
// it is allowed to know how moves work).

import { ApiError, ApiLike, GraphInfo, GraphRef, OrbitLabel, ReachInfo } from "../src/api.js";

export const P4_INFO: GraphInfo = {
  n: 4,
  attach: [3],
  text: "n=4 attach=3",
  pi: ["1000", "1100", "0110", "0011"],
  pi0: [1, 2, 3],
  pi1: [4],
  pi1_size: 1,
  delta_labels: [1, 2, 3, 4],
  delta: ["1000", "1100", "0110", "0011"],
  I: [1, 2, 3, 4],
  J: null,
};

const P4_NEIGHBORS: Record<number, number[]> = { 1: [2], 2: [1, 3], 3: [2, 4], 4: [3] };

export class StubApi implements ApiLike {
  calls: string[] = [];

  async graphInfo(n: number, attach: number[]): Promise<GraphInfo> {
    this.calls.push(`graph ${n} ${attach.join(",")}`);
    if (n !== 4) throw new ApiError(422, "attach_out_of_range", "stub only knows the 4-path");
    return P4_INFO;
  }

  async classify(_graph: GraphRef, config: string): Promise<OrbitLabel> {
    this.calls.push(`classify ${config}`);
    if (!/^[01]{4}$/.test(config)) throw new ApiError(400, "bad_config", `bad config ${config}`);
    const trivial = config.indexOf("1") < 0;
    return { side: "WHOLE", weights: trivial ? [0] : [1, 4], trivial, sw: trivial ? 0 : 1 };
  }

  async move(_graph: GraphRef, config: string, vertex: number): Promise<string> {
    this.calls.push(`move ${config} ${vertex}`);
    if (config.charAt(vertex - 1) !== "1") {
      throw new ApiError(409, "illegal_move", `vertex ${vertex} is white`);
    }
    const bits = config.split("");
    for (const a of P4_NEIGHBORS[vertex]) bits[a - 1] = bits[a - 1] === "1" ? "0" : "1";
    return bits.join("");
  }

  async reach(_graph: GraphRef, from: string, to: string): Promise<ReachInfo> {
    this.calls.push(`reach ${from} ${to}`);
    return { reachable: true, witness: [1, 2, 3], distance: 3 };
  }
}

export function byVertex(v: number): HTMLButtonElement {
  const btn = document.querySelector(`button.vertex[data-v="${v}"]`);
  if (!btn) throw new Error(`no button for vertex ${v}`);
  return btn as HTMLButtonElement;
}
