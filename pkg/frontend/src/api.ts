// Thin typed client for the two read endpoints. Base URL is empty in
// production (same origin as the serving backend) and points at a
// fixture server in tests.

import type { ControlParams, GraphPayload, SearchPayload } from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export class ServiceError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
    this.name = "ServiceError";
  }
}

export function buildSearchUrl(baseUrl: string, query: string): string {
  const qs = new URLSearchParams({ q: query });
  return `${baseUrl}/search?${qs.toString()}`;
}

export function buildGraphUrl(
  baseUrl: string,
  query: string,
  params: ControlParams,
): string {
  const qs = new URLSearchParams({
    q: query,
    n: String(params.n),
    c: String(params.c),
    l: String(params.l),
    b: String(params.b),
    mode: params.mode,
  });
  return `${baseUrl}/graph?${qs.toString()}`;
}

async function getJson<T>(fetchFn: FetchLike, url: string): Promise<T> {
  const response = await fetchFn(url);
  if (!response.ok) {
    let message = `request failed with status ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ServiceError(message, response.status);
  }
  return (await response.json()) as T;
}

export function fetchSearch(
  fetchFn: FetchLike,
  baseUrl: string,
  query: string,
): Promise<SearchPayload> {
  return getJson<SearchPayload>(fetchFn, buildSearchUrl(baseUrl, query));
}

export function fetchGraph(
  fetchFn: FetchLike,
  baseUrl: string,
  query: string,
  params: ControlParams,
): Promise<GraphPayload> {
  return getJson<GraphPayload>(fetchFn, buildGraphUrl(baseUrl, query, params));
}
