//! Brute-force oracles for the integration tests. Nothing in here calls the
//! enumeration engine, the Kostka machinery or the character code of the
//! library; the only shared types are plain vectors.

#![allow(dead_code)]

use std::collections::HashMap;

/// A filling stored row by row.
pub type Filling = Vec<Vec<u32>>;

pub fn cells(shape: &[usize]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

fn is_semistandard(shape: &[usize], f: &Filling) -> bool {
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            if c > 0 && f[r][c - 1] > f[r][c] {
                return false;
            }
            if r > 0 && f[r - 1][c] >= f[r][c] {
                return false;
            }
        }
    }
    true
}

/// Every semistandard filling with entries in `1..=m`, found by filtering
/// all `m^|shape|` fillings.
pub fn sstab_filtered(shape: &[usize], m: u32) -> Vec<Filling> {
    let cs = cells(shape);
    let mut out = Vec::new();
    let mut digits = vec![1u32; cs.len()];
    if m == 0 {
        return if cs.is_empty() { vec![vec![]] } else { out };
    }
    loop {
        let mut f: Filling = shape.iter().map(|&len| vec![0; len]).collect();
        for (&(r, c), &v) in cs.iter().zip(&digits) {
            f[r][c] = v;
        }
        if is_semistandard(shape, &f) {
            out.push(f);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return out;
            }
            if digits[i] < m {
                digits[i] += 1;
                break;
            }
            digits[i] = 1;
            i += 1;
        }
    }
}

/// Semistandard fillings with entries in `1..=m`, built cell by cell. Used
/// where filtering would be too slow.
pub fn sstab_recursive(shape: &[usize], m: u32) -> Vec<Filling> {
    fn go(cs: &[(usize, usize)], i: usize, m: u32, f: &mut Filling, out: &mut Vec<Filling>) {
        if i == cs.len() {
            out.push(f.clone());
            return;
        }
        let (r, c) = cs[i];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(f[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(f[r - 1][c] + 1);
        }
        for v in lo..=m {
            f[r][c] = v;
            go(cs, i + 1, m, f, out);
        }
        f[r][c] = 0;
    }
    let cs = cells(shape);
    let mut f: Filling = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    go(&cs, 0, m, &mut f, &mut out);
    out
}

pub fn weight(f: &Filling, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for &v in f.iter().flatten() {
        w[v as usize - 1] += 1;
    }
    w
}

/// Content-based inversions between two fillings of one shape.
pub fn inv_pair(shape: &[usize], u: &Filling, v: &Filling) -> usize {
    let cs = cells(shape);
    let content = |(r, c): (usize, usize)| c as i64 - r as i64;
    let mut count = 0;
    for &a in &cs {
        for &b in &cs {
            let (ua, ub) = (u[a.0][a.1], u[b.0][b.1]);
            let (va, vb) = (v[a.0][a.1], v[b.0][b.1]);
            if content(a) == content(b) && ua > vb {
                count += 1;
            }
            if content(a) == content(b) - 1 && va > ub {
                count += 1;
            }
        }
    }
    count
}

pub fn inv_tuple(shape: &[usize], t: &[Filling]) -> usize {
    let mut total = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            total += inv_pair(shape, &t[i], &t[j]);
        }
    }
    total
}

/// Ordered tuples of `n` fillings from `alphabet` whose weights add to `target`.
pub fn tuples_with_weight(alphabet: &[Filling], n: usize, target: &[usize]) -> Vec<Vec<Filling>> {
    fn go(
        alphabet: &[(Filling, Vec<usize>)],
        n: usize,
        rem: &mut Vec<usize>,
        cur: &mut Vec<Filling>,
        out: &mut Vec<Vec<Filling>>,
    ) {
        if cur.len() == n {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        for (f, w) in alphabet {
            if w.iter().zip(rem.iter()).all(|(a, b)| a <= b) {
                for (r, a) in rem.iter_mut().zip(w) {
                    *r -= a;
                }
                cur.push(f.clone());
                go(alphabet, n, rem, cur, out);
                cur.pop();
                for (r, a) in rem.iter_mut().zip(w) {
                    *r += a;
                }
            }
        }
    }
    let len = target.len();
    let weighted: Vec<(Filling, Vec<usize>)> = alphabet
        .iter()
        .map(|f| (f.clone(), weight(f, len)))
        .collect();
    let mut out = Vec::new();
    go(
        &weighted,
        n,
        &mut target.to_vec(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `Σ q^Inv` as exponent → count, for a weight that may be any composition.
pub fn llt_brute(shape: &[usize], n: usize, target: &[usize]) -> Vec<i64> {
    let alphabet = sstab_filtered(shape, target.len() as u32);
    let mut hist: Vec<i64> = Vec::new();
    for t in tuples_with_weight(&alphabet, n, target) {
        let e = inv_tuple(shape, &t);
        if hist.len() <= e {
            hist.resize(e + 1, 0);
        }
        hist[e] += 1;
    }
    hist
}

/// Permutations of `0..k` with their signs.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == k {
            let mut inversions = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if cur[i] > cur[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Coefficient of `s_ν` in a symmetric polynomial in `ℓ(ν)` variables, read
/// off through `a_δ·f`: the sum over `σ` of `sgn(σ)·[x^{ν+δ-σδ}] f`.
/// `coeff` must return the monomial coefficient of an exponent vector.
pub fn schur_coefficient<C>(nu: &[usize], mut coeff: C) -> Vec<i64>
where
    C: FnMut(&[usize]) -> Vec<i64>,
{
    let k = nu.len();
    let mut total: Vec<i64> = Vec::new();
    for (sigma, sign) in signed_permutations(k) {
        let mut alpha = Vec::with_capacity(k);
        let mut ok = true;
        for i in 0..k {
            let e = nu[i] as i64 + (k - 1 - i) as i64 - (k - 1 - sigma[i]) as i64;
            if e < 0 {
                ok = false;
                break;
            }
            alpha.push(e as usize);
        }
        if !ok {
            continue;
        }
        let c = coeff(&alpha);
        if total.len() < c.len() {
            total.resize(c.len(), 0);
        }
        for (t, x) in total.iter_mut().zip(c) {
            *t += sign * x;
        }
    }
    while total.last() == Some(&0) {
        total.pop();
    }
    total
}

/// `Σ q^Inv` over tuples of weight `alpha` split by exponent residue: entry
/// `i` keeps exponents `e ≡ i + d (mod n)`.
pub fn residue_parts(hist: &[i64], n: usize, d: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; hist.len()]; n];
    for (e, &c) in hist.iter().enumerate() {
        let i = (e as i64 - d as i64).rem_euclid(n as i64) as usize;
        out[i][e] = c;
    }
    for p in &mut out {
        while p.last() == Some(&0) {
            p.pop();
        }
    }
    out
}

/// Monomial coefficients of `s_λ[s_μ]` in `vars` variables, as a map from
/// exponent vectors to integers. The substituted alphabet lists the
/// monomials of `s_μ` in decreasing exponent order.
pub fn plethysm_monomials(lambda: &[usize], mu: &[usize], vars: usize) -> HashMap<Vec<usize>, i64> {
    let mut inner: Vec<Vec<usize>> = sstab_recursive(mu, vars as u32)
        .iter()
        .map(|f| weight(f, vars))
        .collect();
    inner.sort_by(|a, b| b.cmp(a));
    let mut out = HashMap::new();
    for outer in sstab_recursive(lambda, inner.len() as u32) {
        let mut e = vec![0; vars];
        for &v in outer.iter().flatten() {
            for (x, y) in e.iter_mut().zip(&inner[v as usize - 1]) {
                *x += y;
            }
        }
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

/// `a_{λ[μ]}^ν` for every partition `ν` of `|λ|·|μ|`, keyed by `ν`.
pub fn plethysm_oracle(lambda: &[usize], mu: &[usize]) -> HashMap<Vec<usize>, i64> {
    let size: usize = lambda.iter().sum::<usize>() * mu.iter().sum::<usize>();
    let mut out = HashMap::new();
    let all = partitions(size);
    for vars in 1..=size {
        let of_len: Vec<&Vec<usize>> = all.iter().filter(|p| p.len() == vars).collect();
        if of_len.is_empty() {
            continue;
        }
        let monomials = plethysm_monomials(lambda, mu, vars);
        for nu in of_len {
            let c = schur_coefficient(nu, |alpha| vec![monomials.get(alpha).copied().unwrap_or(0)]);
            out.insert(nu.clone(), c.first().copied().unwrap_or(0));
        }
    }
    out
}

/// Partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Monomial coefficients of the power sum `p_ρ` in `vars` variables.
fn power_sum_monomials(rho: &[usize], vars: usize) -> HashMap<Vec<usize>, i64> {
    let mut acc: HashMap<Vec<usize>, i64> = HashMap::from([(vec![0; vars], 1)]);
    for &r in rho {
        let mut next = HashMap::new();
        for (e, c) in &acc {
            for v in 0..vars {
                let mut e2 = e.clone();
                e2[v] += r;
                *next.entry(e2).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc
}

/// `χ^λ(ρ)` by the Frobenius formula.
pub fn character_frobenius(lambda: &[usize], rho: &[usize]) -> i64 {
    let p = power_sum_monomials(rho, lambda.len());
    schur_coefficient(lambda, |alpha| vec![p.get(alpha).copied().unwrap_or(0)])
        .first()
        .copied()
        .unwrap_or(0)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dimension of the `ζ^i` eigenspace of an `n`-cycle on the Specht module
/// `S^λ`, averaged over the cyclic group in floating point and rounded.
pub fn eigenspace_float(lambda: &[usize], i: usize) -> i64 {
    let n: usize = lambda.iter().sum();
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for j in 0..n {
        let g = gcd(j, n);
        let cycle = vec![n / g; g];
        let chi = character_frobenius(lambda, &cycle) as f64;
        let angle = -2.0 * std::f64::consts::PI * (i * j) as f64 / n as f64;
        re += chi * angle.cos();
        im += chi * angle.sin();
    }
    re /= n as f64;
    im /= n as f64;
    assert!(
        im.abs() < 1e-9 && (re - re.round()).abs() < 1e-9,
        "non-integral dimension {re} + {im}i"
    );
    re.round() as i64
}

/// Minimum of `Inv` over all ordered `n`-tuples of fillings with entries at
/// most `m`, with no pruning.
pub fn d_min_unpruned(shape: &[usize], n: usize, m: u32) -> usize {
    let alphabet = sstab_recursive(shape, m);
    let k = alphabet.len();
    let mut table = vec![0usize; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = inv_pair(shape, &alphabet[a], &alphabet[b]);
        }
    }
    let mut best = usize::MAX;
    let mut idx = vec![0usize; n];
    loop {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                inv += table[idx[i] * k + idx[j]];
            }
        }
        best = best.min(inv);
        let mut p = 0;
        loop {
            if p == n {
                return best;
            }
            idx[p] += 1;
            if idx[p] < k {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// All words with letter multiplicities `weight`.
pub fn words(weight: &[usize]) -> Vec<Vec<u32>> {
    fn go(rem: &mut Vec<usize>, cur: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for a in 0..rem.len() {
            if rem[a] > 0 {
                rem[a] -= 1;
                cur.push(a as u32 + 1);
                go(rem, cur, len, out);
                cur.pop();
                rem[a] += 1;
            }
        }
    }
    let len = weight.iter().sum();
    let mut out = Vec::new();
    go(&mut weight.to_vec(), &mut Vec::new(), len, &mut out);
    out
}

pub fn inv_of(w: &[u32]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn maj_of(w: &[u32]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).sum()
}

/// Compositions of `n` with at most `max_parts` positive parts.
pub fn compositions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for p in 1..=n {
            cur.push(p);
            go(n - p, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Exponent histogram of `Σ q^inv` over words of the given weight.
pub fn inv_distribution(weight: &[usize]) -> Vec<i64> {
    let mut hist = Vec::new();
    for w in words(weight) {
        let e = inv_of(&w);
        if hist.len() <= e {
            hist.resize(e + 1, 0);
        }
        hist[e] += 1;
    }
    hist
}
