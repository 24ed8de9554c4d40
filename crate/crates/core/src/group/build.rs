//! Group specs: `cyclic:n`, `dihedral:n`, `symmetric:n`, `product:S+T[+...]`
//! and `file:path`.
//!
//! The file format is a plain-text Cayley table: the order `n` on the first
//! line, then `n` lines of `n` space-separated indices where row `g`, column
//! `h` holds `g·h`. Element 0 must be the identity.

use std::path::Path;

use super::table::{GroupTable, DEFAULT_MAX_ORDER};
use crate::error::Error;

const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Limits applied while building a group.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Largest accepted order.
    pub max_order: usize,
    /// Orders above this bound get sampled rather than full associativity checks.
    pub full_check_limit: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_order: DEFAULT_MAX_ORDER, full_check_limit: DEFAULT_MAX_ORDER }
    }
}

/// Builds a group from a spec string with default limits.
pub fn build_group(spec: &str) -> Result<GroupTable, Error> {
    build_group_with(spec, BuildOptions::default())
}

pub fn build_group_with(spec: &str, opts: BuildOptions) -> Result<GroupTable, Error> {
    let raw = build_raw(spec.trim(), opts)?;
    if raw.order > opts.max_order {
        return Err(Error::OrderTooLarge { order: raw.order, max: opts.max_order });
    }
    GroupTable::from_table(raw.order, raw.mul, raw.labels, opts.full_check_limit)
}

struct RawTable {
    order: usize,
    mul: Vec<u32>,
    labels: Vec<String>,
}

fn malformed(spec: &str) -> Error {
    Error::MalformedSpec(spec.to_string())
}

fn parse_param(spec: &str, arg: &str) -> Result<usize, Error> {
    arg.trim().parse::<usize>().map_err(|_| malformed(spec))
}

fn build_raw(spec: &str, opts: BuildOptions) -> Result<RawTable, Error> {
    let (kind, arg) = spec.split_once(':').ok_or_else(|| malformed(spec))?;
    let guard = |order: usize| {
        if order > opts.max_order {
            Err(Error::OrderTooLarge { order, max: opts.max_order })
        } else {
            Ok(())
        }
    };
    match kind.trim() {
        "cyclic" => {
            let n = parse_param(spec, arg)?;
            if n == 0 {
                return Err(malformed(spec));
            }
            guard(n)?;
            Ok(cyclic(n))
        }
        "dihedral" => {
            let n = parse_param(spec, arg)?;
            if n == 0 {
                return Err(malformed(spec));
            }
            guard(2 * n)?;
            Ok(dihedral(n))
        }
        "symmetric" => {
            let n = parse_param(spec, arg)?;
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(malformed(spec));
            }
            guard((1..=n).product())?;
            Ok(symmetric(n))
        }
        "product" => {
            let factors = arg.split('+').map(|f| build_raw(f.trim(), opts)).collect::<Result<Vec<_>, _>>()?;
            if factors.len() < 2 {
                return Err(malformed(spec));
            }
            let order: usize = factors.iter().map(|f| f.order).product();
            guard(order)?;
            let mut it = factors.into_iter();
            let first = it.next().unwrap();
            Ok(it.fold(first, |acc, f| direct_product(&acc, &f)))
        }
        "file" => read_table(Path::new(arg.trim()), opts),
        _ => Err(malformed(spec)),
    }
}

fn cyclic(n: usize) -> RawTable {
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(((a + b) % n) as u32);
        }
    }
    RawTable { order: n, mul, labels: (0..n).map(|i| i.to_string()).collect() }
}

/// Rotations `r^k` are indices `0..n`, reflections `s·r^k` are `n..2n`.
fn dihedral(n: usize) -> RawTable {
    let decode = |x: usize| (x / n, x % n); // (reflection bit, rotation power)
    let encode = |s: usize, k: usize| s * n + k;
    let mut mul = Vec::with_capacity(4 * n * n);
    for a in 0..2 * n {
        let (s1, k1) = decode(a);
        for b in 0..2 * n {
            let (s2, k2) = decode(b);
            // s^s1 r^k1 s^s2 r^k2 = s^(s1+s2) r^(±k1 + k2), using r s = s r^-1.
            let k = (if s2 == 0 { k1 + k2 } else { n - k1 + k2 }) % n;
            mul.push(encode((s1 + s2) % 2, k) as u32);
        }
    }
    let labels = (0..2 * n)
        .map(|x| match decode(x) {
            (0, 0) => "e".to_string(),
            (0, k) => format!("r{k}"),
            (_, 0) => "s".to_string(),
            (_, k) => format!("sr{k}"),
        })
        .collect();
    RawTable { order: 2 * n, mul, labels }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&x.to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Permutations of `0..n` in lexicographic one-line order, composed as
/// functions: `(p·q)(i) = p(q(i))`.
fn symmetric(n: usize) -> RawTable {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let mut mul = Vec::with_capacity(perms.len() * perms.len());
    for p in &perms {
        for q in &perms {
            let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
            mul.push(index(&pq) as u32);
        }
    }
    RawTable { order: perms.len(), mul, labels: perms.iter().map(|p| cycle_label(p)).collect() }
}

fn direct_product(a: &RawTable, b: &RawTable) -> RawTable {
    let n = a.order * b.order;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / b.order, x % b.order);
        for y in 0..n {
            let (y1, y2) = (y / b.order, y % b.order);
            let p1 = a.mul[x1 * a.order + y1] as usize;
            let p2 = b.mul[x2 * b.order + y2] as usize;
            mul.push((p1 * b.order + p2) as u32);
        }
    }
    let labels = (0..n).map(|x| format!("({};{})", a.labels[x / b.order], b.labels[x % b.order])).collect();
    RawTable { order: n, mul, labels }
}

fn read_table(path: &Path, opts: BuildOptions) -> Result<RawTable, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text, opts.max_order)
}

/// Parses the plain-text Cayley table format.
pub fn parse_table_text(text: &str, opts: BuildOptions) -> Result<GroupTable, Error> {
    let raw = parse_table(text, opts.max_order)?;
    GroupTable::from_table(raw.order, raw.mul, raw.labels, opts.full_check_limit)
}

fn parse_table(text: &str, max_order: usize) -> Result<RawTable, Error> {
    let bad = |msg: String| Error::NotAGroup(msg);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| bad("missing order line".into()))?
        .parse()
        .map_err(|_| bad("first line must be the order".into()))?;
    if n > max_order {
        return Err(Error::OrderTooLarge { order: n, max: max_order });
    }
    let mut mul = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines.next().ok_or_else(|| bad(format!("missing row {row}")))?;
        let entries = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| bad(format!("bad entry `{t}` in row {row}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != n {
            return Err(bad(format!("row {row} has {} entries, expected {n}", entries.len())));
        }
        mul.extend(entries);
    }
    if lines.next().is_some() {
        return Err(bad("trailing rows after the table".into()));
    }
    Ok(RawTable { order: n, mul, labels: (0..n).map(|i| i.to_string()).collect() })
}
