// Exact rational arithmetic over bigints, enough to apply the server's
// similarity transform without floating point drift.

export interface Rat {
  num: bigint;
  den: bigint; // always positive
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(num: number | bigint, den: number | bigint = 1): Rat {
  let n = BigInt(num);
  let d = BigInt(den);
  if (d === 0n) throw new Error("zero denominator");
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d) || 1n;
  return { num: n / g, den: d / g };
}

export function add(a: Rat, b: Rat): Rat {
  return rat(a.num * b.den + b.num * a.den, a.den * b.den);
}

export function mul(a: Rat, b: Rat): Rat {
  return rat(a.num * b.num, a.den * b.den);
}

export function scaleInt(a: Rat, k: number): Rat {
  return rat(a.num * BigInt(k), a.den);
}

export function eq(a: Rat, b: Rat): boolean {
  return a.num === b.num && a.den === b.den;
}

export function toNumber(a: Rat): number {
  return Number(a.num) / Number(a.den);
}
