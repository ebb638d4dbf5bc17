import { ApiError, StorynetClient } from "./api";
import { LatestRequest, trailingDebounce } from "./debounce";
import { clampParam, DEFAULT_PARAMS, SLIDER_RANGES } from "./params";
import type {
  AnalysisParams,
  NameKind,
  NetworkResponse,
  RawWordRow,
  RegistryEntry,
} from "./types";

export interface RawWordFilters {
  minCount: number;
  minLength: number;
  capitalized: boolean;
  sortBy: "count" | "word";
}

export interface UiState {
  sessionId: string | null;
  documents: number;
  tokens: number;
  rawWords: RawWordRow[];
  rawWordsTotal: number;
  filters: RawWordFilters;
  registry: RegistryEntry[];
  params: AnalysisParams;
  network: NetworkResponse | null;
  dirty: boolean;
  banner: string | null;
}

export type Listener = (state: UiState) => void;

const SLIDER_DEBOUNCE_MS = 250;

/**
 * Single source of truth for the page. Every number displayed comes from a
 * server response kept here; the store never derives scores on its own.
 */
export class CurationStore {
  readonly state: UiState = {
    sessionId: null,
    documents: 0,
    tokens: 0,
    rawWords: [],
    rawWordsTotal: 0,
    filters: { minCount: 2, minLength: 3, capitalized: true, sortBy: "count" },
    registry: [],
    params: { ...DEFAULT_PARAMS },
    network: null,
    dirty: false,
    banner: null,
  };

  private listeners: Listener[] = [];
  private networkGate = new LatestRequest();
  private networkDebounce = trailingDebounce(SLIDER_DEBOUNCE_MS, () => {
    void this.refreshNetwork();
  });

  constructor(private readonly client: StorynetClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  /** Export is only meaningful once at least one name exists. */
  get exportEnabled(): boolean {
    return this.state.sessionId !== null && this.state.registry.length > 0;
  }

  private banner(error: unknown): void {
    this.state.banner =
      error instanceof ApiError ? `server error ${error.status}: ${error.message}` : String(error);
    this.emit();
  }

  clearBanner(): void {
    this.state.banner = null;
    this.emit();
  }

  async openFolder(folder: string): Promise<void> {
    await this.open(() => this.client.openFolder(folder));
  }

  async openProjectFile(path: string): Promise<void> {
    await this.open(() => this.client.openProjectFile(path));
  }

  private async open(call: () => Promise<{ session_id: string; documents: number; tokens: number }>) {
    const body = await call();
    this.state.sessionId = body.session_id;
    this.state.documents = body.documents;
    this.state.tokens = body.tokens;
    this.state.registry = [];
    this.state.network = null;
    this.state.dirty = false;
    this.state.banner = null;
    this.emit();
    await this.refreshRawWords();
  }

  private requireSession(): string {
    if (!this.state.sessionId) throw new Error("no project open");
    return this.state.sessionId;
  }

  setFilters(filters: Partial<RawWordFilters>): void {
    Object.assign(this.state.filters, filters);
    this.emit();
    void this.refreshRawWords();
  }

  async refreshRawWords(): Promise<void> {
    const sessionId = this.requireSession();
    try {
      const body = await this.client.rawWords(sessionId, {
        minCount: this.state.filters.minCount,
        minLength: this.state.filters.minLength,
        capitalized: this.state.filters.capitalized,
        limit: 500,
      });
      const rows = [...body.entries];
      if (this.state.filters.sortBy === "word") {
        rows.sort((a, b) => a.word.localeCompare(b.word));
      }
      this.state.rawWords = rows;
      this.state.rawWordsTotal = body.total;
      this.emit();
    } catch (error) {
      this.banner(error);
    }
  }

  async addName(variant: string, kind: NameKind): Promise<string | null> {
    const sessionId = this.requireSession();
    try {
      const view = await this.client.addName(sessionId, variant, kind);
      this.state.registry = view.names;
      this.state.dirty = true;
      this.emit();
      await this.refreshRawWords();
      await this.refreshNetwork();
      return view.created_id ?? null;
    } catch (error) {
      this.banner(error);
      return null;
    }
  }

  async addVariant(nameId: string, variant: string): Promise<boolean> {
    const sessionId = this.requireSession();
    try {
      const view = await this.client.addVariant(sessionId, nameId, variant);
      this.state.registry = view.names;
      this.state.dirty = true;
      this.emit();
      await this.refreshRawWords();
      await this.refreshNetwork();
      return true;
    } catch (error) {
      this.banner(error);
      return false;
    }
  }

  async removeName(nameId: string): Promise<void> {
    const sessionId = this.requireSession();
    try {
      const view = await this.client.removeName(sessionId, nameId);
      this.state.registry = view.names;
      this.state.dirty = true;
      this.emit();
      await this.refreshRawWords();
      await this.refreshNetwork();
    } catch (error) {
      this.banner(error);
    }
  }

  /**
   * Slider movement: clamp, remember, and schedule a debounced preview
   * refresh. `immediate` models slider release / discrete inputs and
   * refreshes right away.
   */
  setParam(name: keyof AnalysisParams, value: number | string, immediate = false): Promise<void> {
    if (name === "kernel") {
      this.state.params.kernel = value === "exponential" ? "exponential" : "linear";
    } else {
      this.state.params[name] = clampParam(name as keyof typeof SLIDER_RANGES, Number(value));
    }
    this.state.dirty = true;
    this.emit();
    if (immediate) {
      this.networkDebounce.cancel();
      return this.refreshNetwork();
    }
    this.networkDebounce();
    return Promise.resolve();
  }

  async refreshNetwork(): Promise<void> {
    if (!this.state.sessionId) return;
    if (this.state.registry.length === 0) {
      if (this.state.network !== null) {
        this.state.network = null;
        this.emit();
      }
      return;
    }
    const sessionId = this.state.sessionId;
    const params = { ...this.state.params };
    try {
      const body = await this.networkGate.run((signal) =>
        this.client.network(sessionId, params, signal),
      );
      if (body === undefined) return; // superseded by a newer request
      this.state.network = body;
      this.state.params = body.params; // echo of the effective server params
      this.emit();
    } catch (error) {
      this.banner(error);
    }
  }

  async exportGv(): Promise<string> {
    if (!this.exportEnabled) throw new Error("export needs at least one registered name");
    return this.client.exportGv(this.requireSession(), this.state.params);
  }

  async save(path: string): Promise<boolean> {
    const sessionId = this.requireSession();
    try {
      await this.client.saveProject(sessionId, path);
      this.state.dirty = false;
      this.emit();
      return true;
    } catch (error) {
      this.banner(error);
      return false;
    }
  }
}
