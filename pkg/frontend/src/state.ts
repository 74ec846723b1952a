// Client-side session: the one piece of state the server never holds.

import { GraphRef } from "./api.js";

export interface HistoryEntry {
  vertex: number;
  before: string; // config snapshot taken right before the move
}

export class Session {
  readonly graph: GraphRef;
  readonly initial: string;
  config: string;
  target: string;
  history: HistoryEntry[] = [];

  constructor(graph: GraphRef, initial: string, target: string) {
    this.graph = graph;
    this.initial = initial;
    this.config = initial;
    this.target = target;
  }

  applyMove(vertex: number, after: string): void {
    this.history.push({ vertex, before: this.config });
    this.config = after;
  }

  // Undo restores the stored snapshot.  We never re-apply the move: a move is
  // only its own inverse when it is legal again, and legality depends on the
  // state it was made from.
  undo(): boolean {
    const last = this.history.pop();
    if (!last) return false;
    this.config = last.before;
    return true;
  }

  moves(): number[] {
    return this.history.map((h) => h.vertex);
  }
}
