/** In-memory stand-in for the annotation service, faithful to its wire
 * contract: same routes, same status codes, same body shapes, same
 * canonicalization of labels, threads and diagnostics as the live server
 * (shapes pinned by the golden fixtures).
 */

import type {
  DialogueBody,
  Edge,
  Label,
  Taxonomy,
  Thread,
} from "../src/types.js";
import { TAXONOMY, deepCopy } from "./fixtures.js";

const ACT_NAMES = new Set(TAXONOMY.dialog_acts.map((a) => a.name));
const REL_SYMMETRIC = new Map(
  TAXONOMY.rhetorical.map((r) => [r.name, r.symmetric]),
);

function response(status: number, payload: unknown): Response {
  const fake = {
    ok: status >= 200 && status < 300,
    status,
    statusText: "",
    json: async () => JSON.parse(JSON.stringify(payload)) as unknown,
  };
  return fake as unknown as Response;
}

function labelSortKey(label: Label): string {
  return [label.kind, label.tag ?? "", label.orientation ?? ""].join("|");
}

interface Forced {
  status: number;
  body: Record<string, unknown>;
}

export class FakeService {
  readonly bodies = new Map<string, DialogueBody>();
  readonly requests: Array<{ method: string; path: string }> = [];
  posts = 0;
  failNextAdd: Forced | null = null;
  failNextSave: Forced | null = null;
  savedCount = 0;

  constructor(
    bodies: DialogueBody[],
    readonly taxonomy: Taxonomy = TAXONOMY,
  ) {
    for (const body of bodies) {
      this.bodies.set(body.id, deepCopy(body));
    }
  }

  /** Drop-in replacement for fetch, bound so it can be passed around. */
  fetch = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const path = new URL(url).pathname;
    this.requests.push({ method, path });

    if (method === "GET" && path === "/api/taxonomy") {
      return response(200, this.taxonomy);
    }
    if (method === "GET" && path === "/api/dialogues") {
      return response(200, {
        dialogues: Array.from(this.bodies.values()).map((b) => ({
          id: b.id,
          n_units: b.units.length,
          revision: b.revision,
        })),
      });
    }

    const parts = path.split("/").filter(Boolean);
    if (parts[0] !== "api" || parts[1] !== "dialogues" || parts.length < 3) {
      return response(404, { error: "NotFound", detail: `no route '${path}'` });
    }
    const id = decodeURIComponent(parts[2]);
    const body = this.bodies.get(id);
    if (!body) {
      return response(404, {
        error: "NoSuchDialogue",
        detail: `no dialogue '${id}'`,
      });
    }

    if (method === "GET" && parts.length === 3) {
      return response(200, body);
    }
    if (method === "POST" && parts[3] === "edges") {
      this.posts += 1;
      return this.addEdge(body, JSON.parse(String(init?.body ?? "null")));
    }
    if (method === "POST" && parts[3] === "save") {
      if (this.failNextSave) {
        const forced = this.failNextSave;
        this.failNextSave = null;
        return response(forced.status, forced.body);
      }
      this.savedCount += 1;
      return response(200, { saved: true, path: "/tmp/fake-corpus.json" });
    }
    return response(404, { error: "NotFound", detail: `no route '${path}'` });
  };

  /** Another session's mutation: applied directly, bumping the revision. */
  applyExternally(id: string, source: number, target: number, labels: Label[]): void {
    const body = this.bodies.get(id);
    if (!body) {
      throw new Error(`no dialogue ${id}`);
    }
    this.mutate(body, source, target, labels);
  }

  private addEdge(
    body: DialogueBody,
    payload: {
      source?: unknown;
      target?: unknown;
      labels?: unknown;
      expected_revision?: unknown;
    } | null,
  ): Response {
    if (this.failNextAdd) {
      const forced = this.failNextAdd;
      this.failNextAdd = null;
      return response(forced.status, forced.body);
    }
    if (payload === null || typeof payload !== "object") {
      return response(400, {
        error: "MalformedInput",
        detail: "body must be a JSON object",
      });
    }
    const expected = payload.expected_revision;
    if (typeof expected !== "number" || !Number.isInteger(expected)) {
      return response(422, {
        error: "SchemaViolation",
        detail: "expected_revision must be an integer",
      });
    }
    if (expected !== body.revision) {
      return response(409, {
        error: "RevisionConflict",
        detail: `revision is ${body.revision}, not ${expected}`,
        current_revision: body.revision,
      });
    }
    const source = payload.source;
    const target = payload.target;
    if (typeof source !== "number" || typeof target !== "number") {
      return response(422, {
        error: "SchemaViolation",
        detail: "source and target must be integers",
      });
    }
    if (target > source) {
      return response(422, {
        error: "ForwardEdge",
        detail: `edge ${source} -> ${target} points forward`,
      });
    }
    const rawLabels = Array.isArray(payload.labels) ? payload.labels : [];
    const labels: Label[] = [];
    for (const raw of rawLabels as Label[]) {
      const canonical = this.canonicalize(raw);
      if (typeof canonical === "string") {
        return response(422, { error: "UnknownTag", detail: canonical });
      }
      if (
        source === target &&
        canonical.kind === "rhetorical"
      ) {
        return response(422, {
          error: "SelfEdgeWithRhetoricalLabel",
          detail: `self edge on ${source} cannot carry '${canonical.tag}'`,
        });
      }
      labels.push(canonical);
    }
    this.mutate(body, source, target, labels);
    return response(200, body);
  }

  private canonicalize(raw: Label): Label | string {
    if (raw.kind === "continuation") {
      return { kind: "continuation" };
    }
    const tag = raw.tag ?? "";
    if (raw.kind === "dialog_act") {
      if (!ACT_NAMES.has(tag)) {
        return `no tag named '${tag}'`;
      }
      return { kind: "dialog_act", tag };
    }
    if (!REL_SYMMETRIC.has(tag)) {
      return `no tag named '${tag}'`;
    }
    if (REL_SYMMETRIC.get(tag)) {
      return { kind: "rhetorical", tag };
    }
    return {
      kind: "rhetorical",
      tag,
      orientation: raw.orientation === "arg2" ? "arg2" : "arg1",
    };
  }

  private mutate(
    body: DialogueBody,
    source: number,
    target: number,
    labels: Label[],
  ): void {
    const existing = body.edges.find(
      (e) => e.source === source && e.target === target,
    );
    if (existing) {
      const known = new Set(existing.labels.map(labelSortKey));
      for (const label of labels) {
        if (!known.has(labelSortKey(label))) {
          existing.labels.push(label);
          known.add(labelSortKey(label));
        }
      }
      existing.labels.sort((a, b) =>
        labelSortKey(a) < labelSortKey(b) ? -1 : 1,
      );
    } else {
      const edge: Edge = { source, target, labels: [...labels] };
      edge.labels.sort((a, b) => (labelSortKey(a) < labelSortKey(b) ? -1 : 1));
      body.edges.push(edge);
      body.edges.sort((a, b) => a.source - b.source || a.target - b.target);
    }
    body.revision += 1;
    this.recompute(body);
  }

  /** Components over non-self edges; root is the earliest unit. */
  private recompute(body: DialogueBody): void {
    const parent = new Map<number, number>();
    const find = (x: number): number => {
      let r = x;
      while (parent.get(r) !== r) {
        r = parent.get(r)!;
      }
      parent.set(x, r);
      return r;
    };
    for (const unit of body.units) {
      parent.set(unit.id, unit.id);
    }
    for (const edge of body.edges) {
      if (edge.source === edge.target) {
        continue;
      }
      const a = find(edge.source);
      const b = find(edge.target);
      if (a !== b) {
        parent.set(Math.max(a, b), Math.min(a, b));
      }
    }
    const members = new Map<number, number[]>();
    for (const unit of body.units) {
      const root = find(unit.id);
      const bucket = members.get(root);
      if (bucket) {
        bucket.push(unit.id);
      } else {
        members.set(root, [unit.id]);
      }
    }
    const threads: Thread[] = Array.from(members.entries())
      .map(([, ids]) => ids.sort((a, b) => a - b))
      .sort((a, b) => a[0] - b[0])
      .map((ids, index) => ({ id: index, root: ids[0], unit_ids: ids }));
    body.threads = threads;

    const hasDependency = new Set(body.edges.map((e) => e.source));
    body.diagnostics = body.units
      .filter((u) => !hasDependency.has(u.id))
      .map((u) => ({
        severity: "warning",
        code: "MissingContext",
        dialogue_id: body.id,
        unit_id: u.id,
        message: `unit ${u.id} has no dependency; mark a response or a thread start`,
      }));
  }
}
