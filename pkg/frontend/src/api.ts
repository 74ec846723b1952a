// Typed wrappers over the server's JSON API.  All of the mathematics lives
// on the server; the client only renders what comes back.

export interface GraphRef {
  n: number;
  attach: number[];
}

export interface GraphInfo extends GraphRef {
  text: string;
  pi: string[];
  pi0: number[];
  pi1: number[];
  pi1_size: number;
  delta_labels: number[];
  delta: string[];
  I: number[];
  J: number[] | null;
}

export interface OrbitLabel {
  side: string;
  weights: number[];
  trivial: boolean;
  sw: number;
}

export interface ReachInfo {
  reachable: boolean;
  witness: number[] | null;
  distance: number | null;
  note?: string;
}

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function toApiError(res: Response): Promise<ApiError> {
  let code = "unknown";
  let message = `HTTP ${res.status}`;
  try {
    const body = await res.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the bare status line
  }
  return new ApiError(res.status, code, message);
}

export interface ApiLike {
  graphInfo(n: number, attach: number[]): Promise<GraphInfo>;
  classify(graph: GraphRef, config: string): Promise<OrbitLabel>;
  move(graph: GraphRef, config: string, vertex: number): Promise<string>;
  reach(graph: GraphRef, from: string, to: string): Promise<ReachInfo>;
}

export class Client implements ApiLike {
  constructor(private base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const res = await fetch(this.base + path);
    if (!res.ok) throw await toApiError(res);
    return res.json() as Promise<T>;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) throw await toApiError(res);
    return res.json() as Promise<T>;
  }

  graphInfo(n: number, attach: number[]): Promise<GraphInfo> {
    return this.get(`/api/graph?n=${n}&attach=${attach.join(",")}`);
  }

  classify(graph: GraphRef, config: string): Promise<OrbitLabel> {
    return this.post("/api/classify", { graph, config });
  }

  async move(graph: GraphRef, config: string, vertex: number): Promise<string> {
    const out = await this.post<{ config: string }>("/api/move", { graph, config, vertex });
    return out.config;
  }

  reach(graph: GraphRef, from: string, to: string): Promise<ReachInfo> {
    return this.post("/api/reach", { graph, from, to });
  }

  async healthz(): Promise<boolean> {
    const res = await fetch(this.base + "/healthz");
    return res.ok;
  }
}
