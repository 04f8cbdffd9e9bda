/** Thin typed client for the annotation service. */

import type { DialogueBody, ErrorBody, Label, Listing, Taxonomy } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ErrorBody,
  ) {
    super(`${body.error}: ${body.detail}`);
    this.name = "ApiError";
  }
}

export interface AddEdgeRequest {
  source: number;
  target: number;
  labels: Label[];
  expected_revision: number;
}

export interface RemoveEdgeRequest {
  source: number;
  target: number;
  label?: Label;
  expected_revision: number;
}

export interface SaveResult {
  saved: boolean;
  path: string;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    readonly base: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  getTaxonomy(): Promise<Taxonomy> {
    return this.request("GET", "/api/taxonomy");
  }

  listDialogues(): Promise<Listing> {
    return this.request("GET", "/api/dialogues");
  }

  getDialogue(id: string): Promise<DialogueBody> {
    return this.request("GET", `/api/dialogues/${encodeURIComponent(id)}`);
  }

  getStats(id: string): Promise<Record<string, unknown>> {
    return this.request("GET", `/api/dialogues/${encodeURIComponent(id)}/stats`);
  }

  addEdge(id: string, req: AddEdgeRequest): Promise<DialogueBody> {
    return this.request("POST", `/api/dialogues/${encodeURIComponent(id)}/edges`, req);
  }

  removeEdge(id: string, req: RemoveEdgeRequest): Promise<DialogueBody> {
    return this.request("DELETE", `/api/dialogues/${encodeURIComponent(id)}/edges`, req);
  }

  save(id: string): Promise<SaveResult> {
    return this.request("POST", `/api/dialogues/${encodeURIComponent(id)}/save`, {});
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchFn(this.base + path, init);
    let parsed: unknown = null;
    try {
      parsed = await resp.json();
    } catch {
      parsed = null;
    }
    if (!resp.ok) {
      const fallback: ErrorBody = {
        error: `Http${resp.status}`,
        detail: resp.statusText || "request failed",
      };
      throw new ApiError(resp.status, isErrorBody(parsed) ? parsed : fallback);
    }
    return parsed as T;
  }
}

function isErrorBody(value: unknown): value is ErrorBody {
  return (
    typeof value === "object" &&
    value !== null &&
    typeof (value as Record<string, unknown>).error === "string" &&
    typeof (value as Record<string, unknown>).detail === "string"
  );
}
