import type {
  AnalysisParams,
  NameKind,
  NetworkResponse,
  OpenProjectResponse,
  RawWordsResponse,
  RegistryView,
} from "./types";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: unknown,
  ) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
  }
}

export interface RawWordsQuery {
  minLength?: number;
  capitalized?: boolean;
  minCount?: number;
  offset?: number;
  limit?: number;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the storynet service endpoints. */
export class StorynetClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail: unknown = response.statusText;
      try {
        const body = (await response.json()) as { detail?: unknown };
        detail = body.detail ?? body;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  openFolder(folder: string): Promise<OpenProjectResponse> {
    return this.post("/projects", { folder });
  }

  openProjectFile(projectPath: string): Promise<OpenProjectResponse> {
    return this.post("/projects", { project_path: projectPath });
  }

  rawWords(sessionId: string, query: RawWordsQuery = {}): Promise<RawWordsResponse> {
    const search = new URLSearchParams();
    if (query.minLength !== undefined) search.set("min_length", String(query.minLength));
    if (query.capitalized !== undefined) search.set("capitalized", String(query.capitalized));
    if (query.minCount !== undefined) search.set("min_count", String(query.minCount));
    if (query.offset !== undefined) search.set("offset", String(query.offset));
    if (query.limit !== undefined) search.set("limit", String(query.limit));
    const qs = search.toString();
    return this.request(`/projects/${sessionId}/raw-words${qs ? "?" + qs : ""}`);
  }

  addName(sessionId: string, variant: string, kind: NameKind): Promise<RegistryView> {
    return this.post(`/projects/${sessionId}/registry`, {
      op: "add_name",
      variant,
      ntype: kind,
    });
  }

  addVariant(sessionId: string, nameId: string, variant: string): Promise<RegistryView> {
    return this.post(`/projects/${sessionId}/registry`, {
      op: "add_variant",
      name_id: nameId,
      variant,
    });
  }

  removeName(sessionId: string, nameId: string): Promise<RegistryView> {
    return this.post(`/projects/${sessionId}/registry`, {
      op: "remove_name",
      name_id: nameId,
    });
  }

  network(
    sessionId: string,
    params?: Partial<AnalysisParams>,
    signal?: AbortSignal,
  ): Promise<NetworkResponse> {
    const qs = paramsQuery(params);
    return this.request(`/projects/${sessionId}/network${qs}`, { signal });
  }

  async exportGv(sessionId: string, params?: Partial<AnalysisParams>): Promise<string> {
    const response = await this.fetchFn(
      `${this.baseUrl}/projects/${sessionId}/export.gv${paramsQuery(params)}`,
    );
    if (!response.ok) {
      throw new ApiError(response.status, response.statusText);
    }
    return response.text();
  }

  saveProject(sessionId: string, path: string): Promise<{ ok: boolean; path: string }> {
    return this.post(`/projects/${sessionId}/save`, { path });
  }
}

function paramsQuery(params?: Partial<AnalysisParams>): string {
  if (!params) return "";
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) search.set(key, String(value));
  }
  const qs = search.toString();
  return qs ? "?" + qs : "";
}
