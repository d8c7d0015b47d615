// Typed client for the evaluation service.  The UI never computes fuzzy
// math itself: everything it displays comes out of these response bodies.

import { z } from 'zod';

export const EvaluationResponse = z.object({
  success_score: z.number(),
  label: z.string(),
  fired_rules: z.array(z.tuple([z.number(), z.number()])),
  aggregate: z.object({
    domain: z.tuple([z.number(), z.number()]),
    resolution: z.number().int(),
    mu: z.array(z.number()),
  }),
  criterion_scores: z.record(z.number()).optional(),
  warnings: z.array(z.string()).optional(),
  rubric_revision: z.number().int(),
  info: z.record(z.unknown()).optional(),
});
export type EvaluationResponse = z.infer<typeof EvaluationResponse>;

export const RubricEntry = z.object({
  rubric_id: z.string(),
  document: z.record(z.unknown()),
  revision: z.number().int(),
});
export type RubricEntry = z.infer<typeof RubricEntry>;

export interface EvaluationRequest {
  rubric_id: string;
  scores?: Record<string, number>;
  archive_b64?: string;
  resolution?: number;
  info?: Record<string, unknown>;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string
  ) {
    super(`${status}: ${detail}`);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init)
  ) {}

  private async request(path: string, init: RequestInit): Promise<unknown> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      ...init,
      headers: { 'content-type': 'application/json', ...init.headers },
    });
    const body: unknown = await response.json();
    if (!response.ok) {
      const detail =
        typeof body === 'object' && body !== null && 'detail' in body
          ? String((body as { detail: unknown }).detail)
          : response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body;
  }

  async evaluate(request: EvaluationRequest, signal?: AbortSignal): Promise<EvaluationResponse> {
    const body = await this.request('/evaluate', {
      method: 'POST',
      body: JSON.stringify(request),
      signal,
    });
    return EvaluationResponse.parse(body);
  }

  async listRubrics(): Promise<string[]> {
    const body = await this.request('/rubrics', { method: 'GET' });
    return z.object({ rubric_ids: z.array(z.string()) }).parse(body).rubric_ids;
  }

  async getRubric(rubricId: string): Promise<RubricEntry> {
    const body = await this.request(`/rubrics/${encodeURIComponent(rubricId)}`, { method: 'GET' });
    return RubricEntry.parse(body);
  }

  async createRubric(rubricId: string, document: Record<string, unknown>): Promise<RubricEntry> {
    const body = await this.request('/rubrics', {
      method: 'POST',
      body: JSON.stringify({ rubric_id: rubricId, document }),
    });
    return RubricEntry.parse(body);
  }

  async putRubric(
    rubricId: string,
    document: Record<string, unknown>,
    revision: number
  ): Promise<RubricEntry> {
    const body = await this.request(`/rubrics/${encodeURIComponent(rubricId)}`, {
      method: 'PUT',
      body: JSON.stringify({ document, revision }),
    });
    return RubricEntry.parse(body);
  }
}
