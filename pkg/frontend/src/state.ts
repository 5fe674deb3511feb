// Session bookkeeping: what the panels currently show and the trail of
// earlier query states the back button can restore. Both payloads are
// stored verbatim so going back never refetches.

import type { ControlParams, GraphPayload, SearchPayload } from "./types.js";
import { DEFAULT_PARAMS } from "./types.js";

export interface PanelSnapshot {
  query: string;
  search: SearchPayload;
  graph: GraphPayload;
}

export class SessionState {
  params: ControlParams = { ...DEFAULT_PARAMS };
  current: PanelSnapshot | null = null;
  private history: PanelSnapshot[] = [];

  get depth(): number {
    return this.history.length;
  }

  // A new query landed: optionally push what was shown onto the history
  // stack (refinements do, the very first query has nothing to push).
  commit(snapshot: PanelSnapshot, push: boolean): void {
    if (push && this.current !== null) {
      this.history.push(this.current);
    }
    this.current = snapshot;
  }

  // Parameter tweaks replace only the graph panel; the title list and
  // history are untouched because retrieval did not change.
  updateGraph(graph: GraphPayload): void {
    if (this.current === null) return;
    this.current = { ...this.current, graph };
  }

  back(): PanelSnapshot | null {
    const prev = this.history.pop();
    if (prev === undefined) return null;
    this.current = prev;
    return prev;
  }
}
