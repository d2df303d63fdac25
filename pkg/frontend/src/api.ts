import type { ExampleData, ServiceError, SplineRequest, SplineResponse } from "./types.js";

export const DEFAULT_BASE_URL = "http://127.0.0.1:8602";

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceRequestError extends Error {
  constructor(
    public readonly status: number,
    public readonly errors: ServiceError[],
  ) {
    super(errors.map((e) => e.message).join("; ") || `service returned ${status}`);
  }
}

export class SplineClient {
  constructor(
    private readonly baseUrl: string = DEFAULT_BASE_URL,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  async example(id: number): Promise<ExampleData> {
    const r = await this.fetchFn(`${this.baseUrl}/api/v1/examples/${id}`);
    if (!r.ok) throw new ServiceRequestError(r.status, await readErrors(r));
    return (await r.json()) as ExampleData;
  }

  async solve(request: SplineRequest): Promise<SplineResponse> {
    const r = await this.fetchFn(`${this.baseUrl}/api/v1/spline`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!r.ok) throw new ServiceRequestError(r.status, await readErrors(r));
    return (await r.json()) as SplineResponse;
  }

  async healthy(): Promise<boolean> {
    try {
      const r = await this.fetchFn(`${this.baseUrl}/healthz`);
      return r.ok;
    } catch {
      return false;
    }
  }
}

async function readErrors(r: Response): Promise<ServiceError[]> {
  try {
    const body = (await r.json()) as { errors?: ServiceError[] };
    return body.errors ?? [];
  } catch {
    return [];
  }
}
