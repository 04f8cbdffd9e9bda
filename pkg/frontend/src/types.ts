/** Payload shapes for the annotation service HTTP API. */

export type LabelKind = "dialog_act" | "rhetorical" | "continuation";

export type Orientation = "arg1" | "arg2";

export interface Label {
  kind: LabelKind;
  tag?: string;
  orientation?: Orientation;
}

export interface Unit {
  id: number;
  speaker: string;
  text: string;
  start_time?: number;
  end_time?: number;
}

export interface Edge {
  source: number;
  target: number;
  labels: Label[];
}

export interface Thread {
  id: number;
  root: number;
  unit_ids: number[];
}

export interface Diagnostic {
  severity: string;
  code: string;
  dialogue_id: string;
  unit_id: number | null;
  message: string;
}

/** Full dialogue body as returned by GET/POST dialogue routes. */
export interface DialogueBody {
  id: string;
  units: Unit[];
  edges: Edge[];
  revision: number;
  threads: Thread[];
  diagnostics: Diagnostic[];
}

export interface DialogueSummary {
  id: string;
  n_units: number;
  revision: number;
}

export interface Listing {
  dialogues: DialogueSummary[];
}

export interface DialogActEntry {
  name: string;
  category: string;
}

export interface RhetoricalEntry {
  name: string;
  class: string;
  symmetric: boolean;
  dual?: string;
}

export interface Taxonomy {
  dialog_acts: DialogActEntry[];
  rhetorical: RhetoricalEntry[];
}

/** Error payload: stable code in `error`, human text in `detail`. */
export interface ErrorBody {
  error: string;
  detail: string;
  current_revision?: number;
}
