/** DOM rendering: unit column in temporal order, response arcs drawn in a
 * left gutter, label chips on each edge, and thread tints by component.
 */

import { colorForRoot } from "./colors.js";
import type { Diagnostic, DialogueBody, Edge, Label } from "./types.js";

export const ROW_HEIGHT = 56;
export const GUTTER_WIDTH = 150;

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderHooks {
  onUnitClick?: (unitId: number) => void;
  onUnitDblClick?: (unitId: number) => void;
}

/** Chip and arc style family. Dialog acts win over relations for arc color. */
function labelFamily(label: Label): "act" | "rel" | "cont" {
  if (label.kind === "dialog_act") {
    return "act";
  }
  if (label.kind === "rhetorical") {
    return "rel";
  }
  return "cont";
}

function edgeFamily(edge: Edge): "act" | "rel" | "cont" {
  const kinds = new Set(edge.labels.map((l) => l.kind));
  if (kinds.has("dialog_act")) {
    return "act";
  }
  if (kinds.has("rhetorical")) {
    return "rel";
  }
  return "cont";
}

export function chipText(label: Label): string {
  if (label.kind === "continuation") {
    return "continuation";
  }
  if (label.kind === "rhetorical" && label.orientation === "arg2") {
    return `${label.tag} (arg2)`;
  }
  return label.tag ?? "";
}

export interface ArcGeometry {
  path: string;
  midY: number;
  bulgeX: number;
}

/** Cubic arc in the gutter between two row centers, bulging left only. */
export function arcGeometry(sourceY: number, targetY: number): ArcGeometry {
  const span = Math.abs(sourceY - targetY);
  const bulge = Math.min(GUTTER_WIDTH - 10, 24 + span / 4);
  const x = GUTTER_WIDTH;
  const path =
    `M ${x} ${sourceY} ` +
    `C ${x - bulge} ${sourceY}, ${x - bulge} ${targetY}, ${x} ${targetY}`;
  return { path, midY: (sourceY + targetY) / 2, bulgeX: x - bulge };
}

function chipFor(label: Label): HTMLSpanElement {
  const chip = document.createElement("span");
  chip.className = `chip ${labelFamily(label)}`;
  chip.textContent = chipText(label);
  return chip;
}

/** Reject payloads that do not look like a dialogue body before touching them. */
function malformed(body: unknown): string | null {
  if (typeof body !== "object" || body === null) {
    return "payload is not an object";
  }
  const b = body as Record<string, unknown>;
  for (const field of ["units", "edges", "threads", "diagnostics"]) {
    if (!Array.isArray(b[field])) {
      return `payload field ${field} is not an array`;
    }
  }
  if (typeof b.revision !== "number") {
    return "payload field revision is not a number";
  }
  for (const unit of b.units as unknown[]) {
    const u = unit as Record<string, unknown>;
    if (typeof u !== "object" || u === null || typeof u.id !== "number") {
      return "a unit lacks a numeric id";
    }
  }
  for (const edge of b.edges as unknown[]) {
    const e = edge as Record<string, unknown>;
    if (
      typeof e !== "object" ||
      e === null ||
      typeof e.source !== "number" ||
      typeof e.target !== "number" ||
      !Array.isArray(e.labels)
    ) {
      return "an edge lacks source, target, or labels";
    }
  }
  return null;
}

export function renderDialogue(
  container: HTMLElement,
  body: DialogueBody,
  hooks: RenderHooks = {},
): void {
  container.textContent = "";

  const problem = malformed(body);
  if (problem !== null) {
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.textContent = `Cannot display dialogue: ${problem}`;
    container.append(banner);
    return;
  }

  if (body.units.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "This dialogue has no units yet.";
    container.append(empty);
    return;
  }

  const rootOf = new Map<number, number>();
  for (const thread of body.threads) {
    for (const unitId of thread.unit_ids) {
      rootOf.set(unitId, thread.root);
    }
  }

  const indexOf = new Map<number, number>();
  body.units.forEach((unit, idx) => indexOf.set(unit.id, idx));
  const yOf = (unitId: number) =>
    (indexOf.get(unitId) ?? 0) * ROW_HEIGHT + ROW_HEIGHT / 2;

  const view = document.createElement("div");
  view.className = "dialogue-view";

  const gutter = document.createElement("div");
  gutter.className = "arc-gutter";
  gutter.style.width = `${GUTTER_WIDTH}px`;
  gutter.style.height = `${body.units.length * ROW_HEIGHT}px`;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(GUTTER_WIDTH));
  svg.setAttribute("height", String(body.units.length * ROW_HEIGHT));
  gutter.append(svg);

  const column = document.createElement("div");
  column.className = "unit-column";

  const selfChips = new Map<number, HTMLElement>();
  for (const unit of body.units) {
    const row = document.createElement("div");
    row.className = "unit";
    row.dataset.unitId = String(unit.id);
    const root = rootOf.get(unit.id);
    if (root !== undefined) {
      row.style.backgroundColor = colorForRoot(root);
    }

    const idBadge = document.createElement("span");
    idBadge.className = "unit-id";
    idBadge.textContent = `#${unit.id}`;
    const speaker = document.createElement("span");
    speaker.className = "speaker";
    speaker.textContent = unit.speaker;
    const text = document.createElement("span");
    text.className = "text";
    text.textContent = unit.text;
    text.title = unit.text;
    const chips = document.createElement("span");
    chips.className = "unit-chips";
    selfChips.set(unit.id, chips);

    row.append(idBadge, speaker, text, chips);
    if (hooks.onUnitClick) {
      row.addEventListener("click", () => hooks.onUnitClick!(unit.id));
    }
    if (hooks.onUnitDblClick) {
      row.addEventListener("dblclick", () => hooks.onUnitDblClick!(unit.id));
    }
    column.append(row);
  }

  for (const edge of body.edges) {
    if (edge.source === edge.target) {
      const holder = selfChips.get(edge.source);
      if (!holder) {
        continue;
      }
      const marker = document.createElement("span");
      marker.className = "thread-start";
      marker.textContent = "⟲ start";
      holder.append(marker);
      for (const label of edge.labels) {
        holder.append(chipFor(label));
      }
      continue;
    }

    const geo = arcGeometry(yOf(edge.source), yOf(edge.target));
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", geo.path);
    path.setAttribute("class", `arc ${edgeFamily(edge)}`);
    path.dataset.source = String(edge.source);
    path.dataset.target = String(edge.target);
    svg.append(path);

    const chips = document.createElement("div");
    chips.className = "edge-chips";
    chips.dataset.source = String(edge.source);
    chips.dataset.target = String(edge.target);
    chips.style.left = `${geo.bulgeX}px`;
    chips.style.top = `${geo.midY - 10}px`;
    for (const label of edge.labels) {
      chips.append(chipFor(label));
    }
    gutter.append(chips);
  }

  view.append(gutter, column);
  container.append(view);
}

/** Warning list with per-unit focus links. */
export function renderDiagnostics(
  container: HTMLElement,
  diagnostics: Diagnostic[],
  onFocus: (unitId: number) => void = () => {},
): void {
  container.textContent = "";
  if (diagnostics.length === 0) {
    const note = document.createElement("div");
    note.className = "empty-note";
    note.textContent = "No warnings.";
    container.append(note);
    return;
  }
  const list = document.createElement("ul");
  list.className = "diagnostic-list";
  for (const diag of diagnostics) {
    const item = document.createElement("li");
    item.className = "diagnostic";
    item.dataset.severity = diag.severity;
    const badge = document.createElement("span");
    badge.className = `severity ${diag.severity}`;
    badge.textContent = diag.severity;
    const code = document.createElement("span");
    code.className = "code";
    code.textContent = diag.code;
    const message = document.createElement("span");
    message.className = "message";
    message.textContent = diag.message;
    item.append(badge, code, message);
    if (diag.unit_id !== null) {
      const link = document.createElement("button");
      link.type = "button";
      link.className = "focus-link";
      link.textContent = `unit ${diag.unit_id}`;
      const unitId = diag.unit_id;
      link.addEventListener("click", () => onFocus(unitId));
      item.append(link);
    }
    list.append(item);
  }
  container.append(list);
}

/** Scroll a unit row into view and flag it for the annotator's eye. */
export function focusUnit(container: HTMLElement, unitId: number): void {
  const row = container.querySelector(`.unit[data-unit-id="${unitId}"]`);
  if (!(row instanceof HTMLElement)) {
    return;
  }
  for (const other of container.querySelectorAll(".unit.focused")) {
    other.classList.remove("focused");
  }
  row.classList.add("focused");
  if (typeof row.scrollIntoView === "function") {
    row.scrollIntoView({ block: "center" });
  }
}
