// Plain-text formatting for the status panel.

import { OrbitLabel, ReachInfo } from "./api.js";

export function describeLabel(label: OrbitLabel): string {
  if (label.trivial) return "trivial (all white)";
  const weights = label.weights.join(", ");
  return `${label.side}, weights {${weights}}, simple weight ${label.sw}`;
}

export function describeReach(r: ReachInfo): string {
  if (!r.reachable) return "unreachable (different orbit, no move sequence can ever work)";
  if (r.witness !== null && r.distance !== null) {
    if (r.distance === 0) return "reachable, already there";
    return `reachable, distance ${r.distance}`;
  }
  if (r.note) return "reachable; witness unavailable at this size";
  return "reachable";
}

export function witnessText(r: ReachInfo): string {
  if (!r.reachable || !r.witness || r.witness.length === 0) return "";
  return r.witness.map((v) => `s${v}`).join(" ");
}
