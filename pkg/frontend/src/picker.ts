/** Multi-label picker presenting the full taxonomy grouped by category and class. */

import type { Label, Orientation, Taxonomy } from "./types.js";

/** Stable identity for a label, used for dedup and recents. */
export function labelKey(label: Label): string {
  return [label.kind, label.tag ?? "", label.orientation ?? ""].join("|");
}

function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const groups = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = groups.get(k);
    if (bucket) {
      bucket.push(item);
    } else {
      groups.set(k, [item]);
    }
  }
  return groups;
}

export class LabelPicker {
  private root: HTMLElement | null = null;
  private readonly symmetric: Set<string>;

  constructor(private readonly taxonomy: Taxonomy) {
    this.symmetric = new Set(
      taxonomy.rhetorical.filter((r) => r.symmetric).map((r) => r.name),
    );
  }

  /** Build the picker DOM inside `container`, in taxonomy dump order. */
  mount(container: HTMLElement): void {
    container.textContent = "";
    this.root = container;

    const acts = document.createElement("section");
    acts.className = "picker-section";
    acts.dataset.section = "dialog-acts";
    const actsTitle = document.createElement("h3");
    actsTitle.textContent = "Dialog acts";
    acts.append(actsTitle);
    for (const [category, entries] of groupBy(
      this.taxonomy.dialog_acts,
      (e) => e.category,
    )) {
      const group = document.createElement("div");
      group.className = "picker-group";
      group.dataset.group = category;
      const heading = document.createElement("h4");
      heading.textContent = category;
      group.append(heading);
      for (const entry of entries) {
        group.append(this.entryFor("dialog_act", entry.name, false));
      }
      acts.append(group);
    }

    const relations = document.createElement("section");
    relations.className = "picker-section";
    relations.dataset.section = "rhetorical";
    const relTitle = document.createElement("h3");
    relTitle.textContent = "Rhetorical relations";
    relations.append(relTitle);
    for (const [cls, entries] of groupBy(
      this.taxonomy.rhetorical,
      (e) => e.class,
    )) {
      const group = document.createElement("div");
      group.className = "picker-group";
      group.dataset.group = cls;
      const heading = document.createElement("h4");
      heading.textContent = cls;
      group.append(heading);
      for (const entry of entries) {
        group.append(
          this.entryFor("rhetorical", entry.name, !entry.symmetric),
        );
      }
      relations.append(group);
    }

    // the third label kind; kept outside the taxonomy groups on purpose
    const continuation = this.entryFor("continuation", null, false);
    continuation.classList.add("continuation-toggle");

    container.append(acts, relations, continuation);
  }

  private entryFor(
    kind: string,
    tag: string | null,
    withOrientation: boolean,
  ): HTMLLabelElement {
    const entry = document.createElement("label");
    entry.className = "picker-entry";
    const input = document.createElement("input");
    input.type = "checkbox";
    input.dataset.kind = kind;
    if (tag !== null) {
      input.dataset.tag = tag;
    }
    const caption = document.createElement("span");
    caption.textContent = tag ?? "Continuation (same speaker carries on)";
    entry.append(input, caption);
    if (withOrientation) {
      const select = document.createElement("select");
      select.className = "orientation";
      select.dataset.for = tag ?? "";
      select.disabled = true;
      for (const [value, text] of [
        ["arg1", "responder is arg1"],
        ["arg2", "responder is arg2"],
      ] as const) {
        const option = document.createElement("option");
        option.value = value;
        option.textContent = text;
        select.append(option);
      }
      input.addEventListener("change", () => {
        select.disabled = !input.checked;
      });
      entry.append(select);
    }
    return entry;
  }

  private inputs(): HTMLInputElement[] {
    if (!this.root) {
      return [];
    }
    return Array.from(
      this.root.querySelectorAll<HTMLInputElement>("input[type=checkbox]"),
    );
  }

  /** Thread starts carry dialog acts only; relations need two distinct units. */
  setSelfEdgeMode(selfEdge: boolean): void {
    for (const input of this.inputs()) {
      if (input.dataset.kind === "dialog_act") {
        continue;
      }
      input.disabled = selfEdge;
      if (selfEdge && input.checked) {
        input.checked = false;
        input.dispatchEvent(new Event("change"));
      }
    }
  }

  /** Checked labels in display order: acts, then relations, then continuation. */
  selected(): Label[] {
    const out: Label[] = [];
    for (const input of this.inputs()) {
      if (!input.checked || input.disabled) {
        continue;
      }
      const kind = input.dataset.kind;
      if (kind === "continuation") {
        out.push({ kind: "continuation" });
        continue;
      }
      const tag = input.dataset.tag ?? "";
      if (kind === "dialog_act") {
        out.push({ kind: "dialog_act", tag });
        continue;
      }
      const label: Label = { kind: "rhetorical", tag };
      if (!this.symmetric.has(tag)) {
        label.orientation = this.orientationFor(input);
      }
      out.push(label);
    }
    return out;
  }

  private orientationFor(input: HTMLInputElement): Orientation {
    const entry = input.closest(".picker-entry");
    const select = entry?.querySelector<HTMLSelectElement>("select.orientation");
    return select?.value === "arg2" ? "arg2" : "arg1";
  }

  isChecked(label: Label): boolean {
    const input = this.find(label);
    return input !== null && input.checked;
  }

  /** Programmatic toggle, used by the recent-label hotkeys. */
  setChecked(label: Label, checked: boolean): boolean {
    const input = this.find(label);
    if (!input || input.disabled) {
      return false;
    }
    input.checked = checked;
    input.dispatchEvent(new Event("change"));
    if (checked && label.orientation) {
      const entry = input.closest(".picker-entry");
      const select = entry?.querySelector<HTMLSelectElement>("select.orientation");
      if (select) {
        select.value = label.orientation;
      }
    }
    return true;
  }

  private find(label: Label): HTMLInputElement | null {
    for (const input of this.inputs()) {
      if (input.dataset.kind !== label.kind) {
        continue;
      }
      if (label.kind === "continuation" || input.dataset.tag === label.tag) {
        return input;
      }
    }
    return null;
  }

  reset(): void {
    for (const input of this.inputs()) {
      if (input.checked) {
        input.checked = false;
        input.dispatchEvent(new Event("change"));
      }
    }
  }
}
