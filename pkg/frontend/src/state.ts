/** Annotator selection state: none, source chosen, or pair chosen.
 *
 * The pair phase always satisfies target <= source. Forward picks are
 * refused at selection time, mirroring the server's edge direction rule,
 * so the client never even composes a request the service would reject
 * for pointing forward.
 */

export type Selection =
  | { phase: "none" }
  | { phase: "source"; source: number }
  | { phase: "pair"; source: number; target: number; selfEdge: boolean };

export type PickResult =
  | { ok: true; selection: Selection }
  | { ok: false; reason: string };

export class SelectionState {
  selection: Selection = { phase: "none" };

  /** Handle a single click on a unit. */
  pickUnit(unitId: number): PickResult {
    const sel = this.selection;
    if (sel.phase === "source") {
      if (unitId === sel.source) {
        // clicking the chosen source again backs out
        this.selection = { phase: "none" };
        return { ok: true, selection: this.selection };
      }
      if (unitId > sel.source) {
        return {
          ok: false,
          reason:
            `unit ${unitId} comes after unit ${sel.source}; ` +
            "a response points backward, so pick an earlier unit",
        };
      }
      this.selection = {
        phase: "pair",
        source: sel.source,
        target: unitId,
        selfEdge: false,
      };
      return { ok: true, selection: this.selection };
    }
    // from none, or restarting while a pair is already chosen
    this.selection = { phase: "source", source: unitId };
    return { ok: true, selection: this.selection };
  }

  /** Double click: the unit responds to nothing, it starts a thread. */
  beginSelfEdge(unitId: number): Selection {
    this.selection = {
      phase: "pair",
      source: unitId,
      target: unitId,
      selfEdge: true,
    };
    return this.selection;
  }

  clear(): void {
    this.selection = { phase: "none" };
  }
}
