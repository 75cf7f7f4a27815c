/** Session controller: API calls, in-flight guarding, exit warnings.
 *
 * The controller never computes a mutation; it only relays server
 * state.  One state-changing request may be in flight at a time;
 * clicks during that window are rejected as "busy".
 */

import { ApiError, SessionApi } from "./api.js";
import { AnalysisDoc, GalleryFixture, SessionState } from "./types.js";
import { ViewState, buildViewState } from "./view.js";

export type ConfirmFn = (message: string) => boolean | Promise<boolean>;

export type ClickResult = "ok" | "busy" | "cancelled" | "rejected" | "no-session";

export const NO_RETURN_WARNING =
  "This vertex is a certified exit: after mutating here, no sequence of " +
  "mutations returns to the current quiver. Continue?";

export class Controller {
  session: SessionState | null = null;
  analysis: AnalysisDoc | null = null;
  fixtures: GalleryFixture[] = [];
  loaded: GalleryFixture | null = null;
  notice: string | null = null;
  busy = false;

  constructor(private api: SessionApi) {}

  async init(): Promise<void> {
    this.fixtures = (await this.api.gallery()).fixtures;
  }

  async loadGallery(name: string): Promise<void> {
    const fixture = this.fixtures.find((f) => f.name === name);
    if (!fixture) throw new Error(`unknown fixture ${name}`);
    this.busy = true;
    try {
      this.session = await this.api.createSession({
        builder: fixture.builder,
      });
      this.analysis = await this.api.analysis(this.session.id);
      this.loaded = fixture;
      this.notice = null;
    } finally {
      this.busy = false;
    }
  }

  async loadQuiver(doc: { n: number; b: string[][] }): Promise<void> {
    this.busy = true;
    try {
      this.session = await this.api.createSession({ quiver: doc });
      this.analysis = await this.api.analysis(this.session.id);
      this.loaded = null;
      this.notice = null;
    } finally {
      this.busy = false;
    }
  }

  isCertifiedExit(vertex: number): boolean {
    return this.analysis?.exits[String(vertex)] === "certified";
  }

  async clickVertex(vertex: number, confirm: ConfirmFn): Promise<ClickResult> {
    if (!this.session) return "no-session";
    if (this.busy) return "busy";
    if (this.isCertifiedExit(vertex)) {
      const proceed = await confirm(NO_RETURN_WARNING);
      if (!proceed) return "cancelled";
    }
    this.busy = true;
    try {
      this.session = await this.api.mutate(this.session.id, vertex);
      this.analysis = await this.api.analysis(this.session.id);
      this.notice = null;
      return "ok";
    } catch (error) {
      if (error instanceof ApiError) {
        this.notice = error.message;
        return "rejected";
      }
      throw error;
    } finally {
      this.busy = false;
    }
  }

  /** Next vertex along the loaded fixture's cycle, by steps taken so far. */
  nextCycleVertex(): number | null {
    if (!this.session || !this.loaded || this.loaded.sequence.length === 0) {
      return null;
    }
    return this.loaded.sequence[
      this.session.moves.length % this.loaded.sequence.length
    ];
  }

  async stepCycle(confirm: ConfirmFn): Promise<ClickResult> {
    const vertex = this.nextCycleVertex();
    if (vertex === null) return "no-session";
    return this.clickVertex(vertex, confirm);
  }

  async undoMove(): Promise<ClickResult> {
    if (!this.session) return "no-session";
    if (this.busy) return "busy";
    this.busy = true;
    try {
      this.session = await this.api.undo(this.session.id);
      this.analysis = await this.api.analysis(this.session.id);
      this.notice = null;
      return "ok";
    } catch (error) {
      if (error instanceof ApiError) {
        this.notice = error.message;
        return "rejected";
      }
      throw error;
    } finally {
      this.busy = false;
    }
  }

  view(): ViewState {
    return buildViewState(this.session, this.analysis, this.busy, this.notice);
  }
}
