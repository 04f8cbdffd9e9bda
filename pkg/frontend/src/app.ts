/** Controller: wires the service client, selection state, picker and
 * renderer to the page, and keeps the view in lockstep with server
 * responses (threads and tints always come from the latest payload,
 * never from client-side recomputation).
 */

import { ApiClient, ApiError } from "./api.js";
import { LabelPicker, labelKey } from "./picker.js";
import {
  chipText,
  focusUnit,
  renderDialogue,
  renderDiagnostics,
} from "./render.js";
import { SelectionState } from "./state.js";
import type { DialogueBody, Label, Taxonomy } from "./types.js";

const MAX_RECENTS = 9;

function describe(exc: unknown): string {
  return exc instanceof Error ? exc.message : String(exc);
}

export class App {
  readonly state = new SelectionState();
  picker: LabelPicker | null = null;
  body: DialogueBody | null = null;
  taxonomy: Taxonomy | null = null;
  recents: Label[] = [];
  cursor = -1;

  private els!: {
    select: HTMLSelectElement;
    revision: HTMLElement;
    saveButton: HTMLButtonElement;
    notices: HTMLElement;
    dialogueHost: HTMLElement;
    summary: HTMLElement;
    pickerPanel: HTMLElement;
    pairTitle: HTMLElement;
    edgeError: HTMLElement;
    recentHints: HTMLElement;
    pickerHost: HTMLElement;
    confirmButton: HTMLButtonElement;
    cancelButton: HTMLButtonElement;
    diagnosticsHost: HTMLElement;
  };

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  async start(): Promise<void> {
    this.buildShell();
    try {
      this.taxonomy = await this.api.getTaxonomy();
    } catch (exc) {
      this.fatal(`Could not load the taxonomy: ${describe(exc)}`);
      return;
    }
    this.picker = new LabelPicker(this.taxonomy);
    this.picker.mount(this.els.pickerHost);

    let listing;
    try {
      listing = await this.api.listDialogues();
    } catch (exc) {
      this.fatal(`Could not list dialogues: ${describe(exc)}`);
      return;
    }
    this.els.select.textContent = "";
    for (const entry of listing.dialogues) {
      const option = document.createElement("option");
      option.value = entry.id;
      option.textContent = `${entry.id} (${entry.n_units} units)`;
      this.els.select.append(option);
    }
    if (listing.dialogues.length === 0) {
      const empty = document.createElement("div");
      empty.className = "empty-state";
      empty.textContent = "The corpus has no dialogues to annotate.";
      this.els.dialogueHost.append(empty);
      return;
    }
    await this.loadDialogue(listing.dialogues[0].id);
  }

  private buildShell(): void {
    this.root.innerHTML = `
      <header class="topbar">
        <h1>Dialogue annotation</h1>
        <select class="dialogue-select"></select>
        <span class="revision-badge"></span>
        <button type="button" class="save-button">Save corpus</button>
      </header>
      <div class="notice-area"></div>
      <main class="workspace">
        <section class="dialogue-host"></section>
        <aside class="side-panel">
          <div class="selection-summary"></div>
          <div class="picker-panel hidden">
            <div class="pair-title"></div>
            <div class="edge-error hidden"></div>
            <div class="recent-hints"></div>
            <div class="picker-host"></div>
            <div class="picker-actions">
              <button type="button" class="confirm-button">Add edge</button>
              <button type="button" class="cancel-button">Cancel</button>
            </div>
          </div>
          <h2>Validation</h2>
          <div class="diagnostics-host"></div>
        </aside>
      </main>
    `;
    const pick = <T extends Element>(selector: string): T => {
      const el = this.root.querySelector<T>(selector);
      if (!el) {
        throw new Error(`shell is missing ${selector}`);
      }
      return el;
    };
    this.els = {
      select: pick(".dialogue-select"),
      revision: pick(".revision-badge"),
      saveButton: pick(".save-button"),
      notices: pick(".notice-area"),
      dialogueHost: pick(".dialogue-host"),
      summary: pick(".selection-summary"),
      pickerPanel: pick(".picker-panel"),
      pairTitle: pick(".pair-title"),
      edgeError: pick(".edge-error"),
      recentHints: pick(".recent-hints"),
      pickerHost: pick(".picker-host"),
      confirmButton: pick(".confirm-button"),
      cancelButton: pick(".cancel-button"),
      diagnosticsHost: pick(".diagnostics-host"),
    };
    this.els.select.addEventListener("change", () => {
      void this.loadDialogue(this.els.select.value);
    });
    this.els.saveButton.addEventListener("click", () => {
      void this.save();
    });
    this.els.confirmButton.addEventListener("click", () => {
      void this.confirm();
    });
    this.els.cancelButton.addEventListener("click", () => {
      this.picker?.reset();
      this.state.clear();
      this.syncSelectionView();
    });
    document.addEventListener("keydown", (event) => this.onKey(event));
  }

  async loadDialogue(id: string): Promise<void> {
    try {
      const body = await this.api.getDialogue(id);
      this.state.clear();
      this.cursor = -1;
      this.applyBody(body);
    } catch (exc) {
      this.notify("error", `Could not load dialogue ${id}: ${describe(exc)}`);
    }
  }

  /** Render a server response and resync every dependent view. */
  private applyBody(body: DialogueBody): void {
    this.body = body;
    this.els.select.value = body.id;
    this.els.revision.textContent = `revision ${body.revision}`;
    renderDialogue(this.els.dialogueHost, body, {
      onUnitClick: (unitId) => this.onUnitClick(unitId),
      onUnitDblClick: (unitId) => this.onUnitDblClick(unitId),
    });
    renderDiagnostics(this.els.diagnosticsHost, body.diagnostics, (unitId) =>
      focusUnit(this.els.dialogueHost, unitId),
    );
    this.syncSelectionView();
    this.syncCursorView();
  }

  onUnitClick(unitId: number): void {
    const result = this.state.pickUnit(unitId);
    if (!result.ok) {
      this.showSelectionNotice(unitId, result.reason);
      return;
    }
    this.clearSelectionNotices();
    this.syncSelectionView();
  }

  onUnitDblClick(unitId: number): void {
    this.state.beginSelfEdge(unitId);
    this.clearSelectionNotices();
    this.syncSelectionView();
  }

  /** Inline explanation attached to the unit the annotator just clicked. */
  private showSelectionNotice(unitId: number, reason: string): void {
    this.clearSelectionNotices();
    const row = this.els.dialogueHost.querySelector(
      `.unit[data-unit-id="${unitId}"]`,
    );
    if (!(row instanceof HTMLElement)) {
      return;
    }
    const notice = document.createElement("div");
    notice.className = "selection-notice";
    notice.textContent = reason;
    row.append(notice);
  }

  private clearSelectionNotices(): void {
    for (const el of this.els.dialogueHost.querySelectorAll(".selection-notice")) {
      el.remove();
    }
  }

  private syncSelectionView(): void {
    const sel = this.state.selection;
    for (const row of this.els.dialogueHost.querySelectorAll(".unit")) {
      row.classList.remove("selected-source", "selected-target");
    }
    const mark = (unitId: number, cls: string) => {
      const row = this.els.dialogueHost.querySelector(
        `.unit[data-unit-id="${unitId}"]`,
      );
      row?.classList.add(cls);
    };
    if (sel.phase === "none") {
      this.els.summary.textContent =
        "Click the responding unit, then the unit it responds to. " +
        "Double-click a unit that starts a new thread.";
    } else if (sel.phase === "source") {
      mark(sel.source, "selected-source");
      this.els.summary.textContent =
        `Unit ${sel.source} responds to... click an earlier unit, ` +
        "or click it again to back out.";
    } else {
      mark(sel.source, "selected-source");
      if (!sel.selfEdge) {
        mark(sel.target, "selected-target");
      }
      this.els.summary.textContent = sel.selfEdge
        ? `Unit ${sel.source} starts a thread.`
        : `Unit ${sel.source} responds to unit ${sel.target}.`;
    }

    const paired = sel.phase === "pair";
    this.els.pickerPanel.classList.toggle("hidden", !paired);
    if (paired && this.picker) {
      this.picker.setSelfEdgeMode(sel.selfEdge);
      this.els.pairTitle.textContent = sel.selfEdge
        ? `Thread start on unit ${sel.source}`
        : `Edge ${sel.source} → ${sel.target}`;
      this.hideEdgeError();
      this.renderRecentHints();
    }
  }

  private renderRecentHints(): void {
    this.els.recentHints.textContent = "";
    this.recents.forEach((label, index) => {
      const hint = document.createElement("span");
      hint.className = "recent-hint";
      const key = document.createElement("kbd");
      key.textContent = String(index + 1);
      hint.append(key, ` ${chipText(label)}`);
      this.els.recentHints.append(hint);
    });
  }

  private showEdgeError(text: string): void {
    this.els.edgeError.textContent = text;
    this.els.edgeError.classList.remove("hidden");
  }

  private hideEdgeError(): void {
    this.els.edgeError.textContent = "";
    this.els.edgeError.classList.add("hidden");
  }

  async confirm(): Promise<void> {
    const sel = this.state.selection;
    if (sel.phase !== "pair" || !this.body || !this.picker) {
      return;
    }
    const labels = this.picker.selected();
    if (labels.length === 0) {
      this.showEdgeError("Pick at least one label.");
      return;
    }
    if (sel.target > sel.source) {
      // unreachable: the selection machine refuses forward pairs
      this.showEdgeError("A response must point backward.");
      return;
    }
    try {
      const body = await this.api.addEdge(this.body.id, {
        source: sel.source,
        target: sel.target,
        labels,
        expected_revision: this.body.revision,
      });
      this.rememberRecents(labels);
      this.picker.reset();
      this.state.clear();
      this.applyBody(body);
      const what = sel.selfEdge
        ? `thread start on unit ${sel.source}`
        : `edge ${sel.source} → ${sel.target}`;
      this.notify("ok", `Added ${what} (${labels.length} label${labels.length === 1 ? "" : "s"}).`);
    } catch (exc) {
      if (exc instanceof ApiError && exc.status === 409) {
        await this.reloadAfterConflict(exc.body.current_revision);
      } else if (exc instanceof ApiError) {
        this.showEdgeError(`${exc.body.error}: ${exc.body.detail}`);
      } else {
        this.showEdgeError(describe(exc));
      }
    }
  }

  /** Someone else moved the dialogue; refresh and keep the annotator's work. */
  private async reloadAfterConflict(currentRevision?: number): Promise<void> {
    if (!this.body) {
      return;
    }
    try {
      const body = await this.api.getDialogue(this.body.id);
      this.applyBody(body);
      const at = currentRevision ?? body.revision;
      this.notify(
        "warn",
        `Dialogue changed on the server (now at revision ${at}); ` +
          "the view was reloaded and your selection and labels are kept.",
      );
    } catch (exc) {
      this.notify("error", `Reload after conflict failed: ${describe(exc)}`);
    }
  }

  private rememberRecents(labels: Label[]): void {
    for (const label of labels) {
      this.recents = this.recents.filter(
        (known) => labelKey(known) !== labelKey(label),
      );
      this.recents.unshift(label);
    }
    this.recents = this.recents.slice(0, MAX_RECENTS);
  }

  async save(): Promise<void> {
    if (!this.body) {
      return;
    }
    try {
      const result = await this.api.save(this.body.id);
      this.notify("ok", `Corpus saved to ${result.path}.`);
    } catch (exc) {
      if (exc instanceof ApiError) {
        this.notify("error", `Save failed. ${exc.body.error}: ${exc.body.detail}`);
      } else {
        this.notify("error", `Save failed: ${describe(exc)}`);
      }
    }
  }

  private notify(kind: "ok" | "warn" | "error", text: string): void {
    this.els.notices.textContent = "";
    const notice = document.createElement("div");
    notice.className = `notice ${kind}`;
    notice.textContent = text;
    this.els.notices.append(notice);
  }

  private fatal(text: string): void {
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.textContent = text;
    this.root.append(banner);
  }

  /** j/k walk the column, enter picks, digits recall recent labels. */
  private onKey(event: KeyboardEvent): void {
    const target = event.target;
    if (
      target instanceof HTMLElement &&
      (target.tagName === "SELECT" ||
        target.tagName === "TEXTAREA" ||
        (target instanceof HTMLInputElement && target.type !== "checkbox"))
    ) {
      return;
    }
    if (!this.body) {
      return;
    }
    if (event.key === "j" || event.key === "k") {
      const step = event.key === "j" ? 1 : -1;
      const last = this.body.units.length - 1;
      this.cursor = Math.min(last, Math.max(0, this.cursor + step));
      this.syncCursorView();
      event.preventDefault();
    } else if (event.key === "Enter" && this.cursor >= 0) {
      const unit = this.body.units[this.cursor];
      if (unit) {
        this.onUnitClick(unit.id);
      }
      event.preventDefault();
    } else if (event.key === "Escape") {
      this.picker?.reset();
      this.state.clear();
      this.clearSelectionNotices();
      this.syncSelectionView();
    } else if (/^[1-9]$/.test(event.key)) {
      if (this.els.pickerPanel.classList.contains("hidden") || !this.picker) {
        return;
      }
      const label = this.recents[Number(event.key) - 1];
      if (label) {
        this.picker.setChecked(label, !this.picker.isChecked(label));
        event.preventDefault();
      }
    }
  }

  private syncCursorView(): void {
    if (!this.body) {
      return;
    }
    const rows = this.els.dialogueHost.querySelectorAll(".unit");
    rows.forEach((row, index) => {
      row.classList.toggle("cursor", index === this.cursor);
    });
    if (this.cursor >= 0) {
      const row = rows[this.cursor];
      if (row instanceof HTMLElement && typeof row.scrollIntoView === "function") {
        row.scrollIntoView({ block: "nearest" });
      }
    }
  }
}
