// Exact scalar strings ("p/q", "p", "inf") cross the wire; the client only
// converts them to floats for drawing and snaps drag positions back to
// bounded-denominator rationals.  No exact arithmetic happens here.

export const SNAP_DENOMINATOR = 1000;

export function scalarToNumber(s: string): number {
  if (s === "inf") return Infinity;
  const slash = s.indexOf("/");
  if (slash < 0) return Number(s);
  return Number(s.slice(0, slash)) / Number(s.slice(slash + 1));
}

function gcd(a: number, b: number): number {
  a = Math.abs(a);
  b = Math.abs(b);
  while (b) {
    [a, b] = [b, a % b];
  }
  return a || 1;
}

/** Snap a screen-derived coordinate to a rational with denominator <= 1000. */
export function snapToRational(x: number): string {
  let num = Math.round(x * SNAP_DENOMINATOR);
  let den = SNAP_DENOMINATOR;
  const g = gcd(num, den);
  num /= g;
  den /= g;
  return den === 1 ? String(num) : `${num}/${den}`;
}

export function isScalarString(s: unknown): s is string {
  return typeof s === "string" && (s === "inf" || /^-?\d+(\/\d+)?$/.test(s.trim()));
}
