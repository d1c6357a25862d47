//! Property suites behind the command-line `check` command. Each suite returns a
//! report with one line per property: how many cases were checked and how many failed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adem::{composite_formula, e3_normalized_cochain, AdemEngine};
use crate::algebra::{boundary, random_cochain, random_cocycle, Chain, Cochain, Integer, Ring, Tensor, TensorChain, Z2};
use crate::complex::{Operator, OperatorWord, ProductSimplex, Simplex, SimplicialSet, Vertex};
use crate::cup::{cup_i, eq1_residual};
use crate::ez::{
    aw, aw4_chain, aw_chain, aw_split, em, em4, em_chain, sh, sh4_chain, sh_chain, sh_tilde, Normalization, Perm,
    ProductChain,
};
use crate::fixtures;
use crate::{Error, Exec, Result};

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// The five contraction identities for `(Aw, Em, Sh)` and `(Aw_4, Em_4, Sh_4)`.
    Ez,
    /// The coboundary formula for cup-i products.
    Eq1,
    /// The cochain-level Adem relation at `i = 0`.
    Adem,
    /// The normalized `E_3` table against the composite formula.
    E3,
    /// The `Aw_4 (t Sh_4)^n` identities.
    Appendix,
    /// Normal forms of operator words and the null-summand properties.
    Words,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Ez, Suite::Eq1, Suite::Adem, Suite::E3, Suite::Appendix, Suite::Words];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ez => "ez",
            Suite::Eq1 => "eq1",
            Suite::Adem => "adem",
            Suite::E3 => "e3",
            Suite::Appendix => "appendix",
            Suite::Words => "words",
        }
    }

    /// Sample count used when none is given.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Ez => 0,
            Suite::Eq1 => 50,
            Suite::Adem | Suite::E3 => 20,
            Suite::Appendix => 20,
            Suite::Words => 1000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// One checked property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{status}  {}: {} cases, {} failures", c.name, c.cases, c.failures)?;
        }
        Ok(())
    }
}

/// Tallies cases of one property.
struct Tally {
    name: String,
    cases: usize,
    failures: usize,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), cases: 0, failures: 0 }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        self.failures += usize::from(!ok);
    }

    fn done(self) -> Check {
        Check { name: self.name, cases: self.cases, failures: self.failures }
    }
}

/// Runs a suite; `samples = None` uses the suite's default.
pub fn run(suite: Suite, seed: u64, samples: Option<usize>) -> Result<SuiteReport> {
    let samples = samples.unwrap_or(suite.default_samples());
    let checks = match suite {
        Suite::Ez => ez_suite()?,
        Suite::Eq1 => eq1_suite(seed, samples)?,
        Suite::Adem => adem_suite(seed, samples)?,
        Suite::E3 => e3_suite(seed, samples)?,
        Suite::Appendix => fourfold_suite(seed, samples)?,
        Suite::Words => words_suite(seed, samples)?,
    };
    Ok(SuiteReport { suite, seed, samples, checks })
}

/// All non-degenerate simplices of `(Δ^top)^{×arity}` of dimension at most `max_dim`.
pub fn product_basis(arity: usize, top: Vertex, max_dim: usize) -> Vec<ProductSimplex> {
    fn extend(path: &mut Vec<Vec<Vertex>>, top: Vertex, max_dim: usize, out: &mut Vec<Vec<Vec<Vertex>>>) {
        out.push(path.clone());
        if path.len() > max_dim {
            return;
        }
        let last = path.last().expect("non-empty").clone();
        let mut next = last.clone();
        loop {
            // advance `next` through all points >= last in lexicographic order
            let mut k = next.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                if next[k] < top {
                    next[k] += 1;
                    for j in k + 1..next.len() {
                        next[j] = last[j];
                    }
                    break;
                }
            }
            path.push(next.clone());
            extend(path, top, max_dim, out);
            path.pop();
        }
    }
    let mut paths = Vec::new();
    let mut start = vec![0; arity];
    loop {
        extend(&mut vec![start.clone()], top, max_dim, &mut paths);
        let Some(k) = (0..arity).rev().find(|&k| start[k] < top) else { break };
        start[k] += 1;
        for v in &mut start[k + 1..] {
            *v = 0;
        }
    }
    paths.into_iter().map(|p| product_from_points(arity, &p)).collect()
}

fn product_from_points(arity: usize, points: &[Vec<Vertex>]) -> ProductSimplex {
    let factors: Vec<Simplex> =
        (0..arity).map(|k| Simplex::new(&points.iter().map(|p| p[k]).collect::<Vec<_>>()).expect("monotone")).collect();
    ProductSimplex::new(&factors).expect("equal dimensions")
}

/// A random non-degenerate simplex of `(Δ^top)^{×arity}` of dimension `dim`.
fn random_product(rng: &mut ChaCha8Rng, arity: usize, top: Vertex, dim: usize) -> ProductSimplex {
    loop {
        let factors: Vec<Simplex> = (0..arity)
            .map(|_| {
                let mut v: Vec<Vertex> = (0..=dim).map(|_| rng.gen_range(0..=top)).collect();
                v.sort_unstable();
                Simplex::new(&v).expect("sorted")
            })
            .collect();
        let x = ProductSimplex::new(&factors).expect("equal dimensions");
        if !x.is_degenerate() {
            return x;
        }
    }
}

fn nondegenerate_simplices(top: Vertex, max_dim: usize) -> Vec<ProductSimplex> {
    product_basis(1, top, max_dim)
}

fn ez_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let xs = product_basis(2, 2, 4);
    let singles = nondegenerate_simplices(2, 4);
    let ts: Vec<Tensor> = singles
        .iter()
        .flat_map(|a| singles.iter().filter(|b| a.dim() + b.dim() <= 4).map(move |b| Tensor::pair(a.clone(), b.clone())))
        .collect();
    let (mut fg, mut homotopy, mut phi_g, mut f_phi, mut phi_phi) = (
        Tally::new("pairs: Aw Em = 1"),
        Tally::new("pairs: Sh d + d Sh = Em Aw - 1"),
        Tally::new("pairs: Sh Em = 0"),
        Tally::new("pairs: Aw Sh = 0"),
        Tally::new("pairs: Sh Sh = 0"),
    );
    for t in &ts {
        let e = em::<Integer>(&t.factors()[0], &t.factors()[1]);
        fg.record(aw_chain(&e) == TensorChain::basis(t.clone()));
        phi_g.record(sh_chain(&e).is_zero());
    }
    for x in &xs {
        let one: ProductChain<Integer> = Chain::basis(x.clone());
        let s = sh_chain(&one);
        homotopy.record(sh_chain(&boundary(&one)).plus(&boundary(&s)) == em_chain(&aw_chain(&one)).minus(&one));
        f_phi.record(aw_chain(&s).is_zero());
        phi_phi.record(sh_chain(&s).is_zero());
    }
    checks.extend([fg, homotopy, phi_g, f_phi, phi_phi].map(Tally::done));

    let xs4 = product_basis(4, 2, 3);
    let singles3 = nondegenerate_simplices(2, 3);
    let mut ts4 = Vec::new();
    for a in &singles3 {
        for b in &singles3 {
            for c in &singles3 {
                for d in &singles3 {
                    if a.dim() + b.dim() + c.dim() + d.dim() <= 3 {
                        ts4.push(Tensor::new([a.clone(), b.clone(), c.clone(), d.clone()]));
                    }
                }
            }
        }
    }
    let mut fg = Tally::new("fourfold: Aw_4 Em_4 = 1");
    let mut phi_g = Tally::new("fourfold: Sh_4 Em_4 = 0");
    for t in &ts4 {
        let e = em4::<Integer>(t)?;
        fg.record(aw4_chain(&e)? == TensorChain::basis(t.clone()));
        phi_g.record(sh4_chain(&e)?.is_zero());
    }
    let results = Exec::default().map(&xs4, |x| -> Result<[bool; 3]> {
        let one: ProductChain<Integer> = Chain::basis(x.clone());
        let s = sh4_chain(&one)?;
        let lhs = sh4_chain(&boundary(&one))?.plus(&boundary(&s));
        let rhs = crate::ez::em4_chain(&aw4_chain(&one)?)?.minus(&one);
        Ok([lhs == rhs, aw4_chain(&s)?.is_zero(), sh4_chain(&s)?.is_zero()])
    });
    let mut homotopy = Tally::new("fourfold: Sh_4 d + d Sh_4 = Em_4 Aw_4 - 1");
    let mut f_phi = Tally::new("fourfold: Aw_4 Sh_4 = 0");
    let mut phi_phi = Tally::new("fourfold: Sh_4 Sh_4 = 0");
    for r in results {
        let [a, b, c] = r?;
        homotopy.record(a);
        f_phi.record(b);
        phi_phi.record(c);
    }
    checks.extend([fg, homotopy, phi_g, f_phi, phi_phi].map(Tally::done));
    Ok(checks)
}

fn eq1_suite(seed: u64, samples: usize) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for k in [fixtures::simplex_boundary(4), fixtures::simplex(5)] {
        let top = k.dim();
        for i in 1..=3 {
            let mut tally = Tally::new(format!("{}: coboundary formula for cup_{i}", k.name()));
            for _ in 0..samples {
                // degrees with a non-empty target: i <= m + n and m + n - i + 1 <= dim
                let (m, n) = loop {
                    let (m, n) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
                    if m + n >= i && m + n < top + i {
                        break (m, n);
                    }
                };
                let a = random_cochain::<Integer>(&k, m, rng.gen());
                let b = random_cochain::<Integer>(&k, n, rng.gen());
                tally.record(eq1_residual(&k, &a, &b, i)?.is_zero());
            }
            checks.push(tally.done());
        }
    }
    Ok(checks)
}

/// The constant cocycle followed by `samples` random integral 2-cocycles.
fn two_cocycles(k: &SimplicialSet, seed: u64, samples: usize) -> Vec<Cochain<Integer>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Cochain::constant(k, 2, Integer::one())];
    out.extend((0..samples).map(|_| random_cocycle::<Integer>(k, 2, rng.gen())));
    out
}

fn adem_suite(seed: u64, samples: usize) -> Result<Vec<Check>> {
    let k = fixtures::simplex(7);
    let engine = AdemEngine::global();
    let mut cocycles = Tally::new("simplex-7: Adem relation on 2-cocycles");
    let mut simplices = Tally::new("simplex-7: agreeing 6-simplices");
    for c in two_cocycles(&k, seed, samples) {
        let r = engine.adem_relation_residual(&k, &c)?;
        cocycles.record(r.holds());
        simplices.cases += r.checked;
        simplices.failures += r.disagreements;
    }
    Ok(vec![cocycles.done(), simplices.done()])
}

fn e3_suite(seed: u64, samples: usize) -> Result<Vec<Check>> {
    let k = fixtures::simplex(6);
    let engine = AdemEngine::global();
    let mut tally = Tally::new("simplex-6: normalized E_3 equals the composite");
    for c in two_cocycles(&k, seed, samples) {
        tally.record(e3_normalized_cochain(&k, &c, engine.exec())? == engine.adem_e_cochain(&k, &c)?);
    }
    Ok(vec![tally.done()])
}

/// `(t Sh_4)^n`, optionally preceded by `t^{×2} Sh_4`, applied to `Δx`, then `Aw_4`, mod 2.
fn fourfold_lhs(x: &Simplex, n: usize, with_t2: bool) -> Result<TensorChain<Z2>> {
    let mut ch: ProductChain<Z2> = Chain::basis(ProductSimplex::diag(x, 4));
    if with_t2 {
        ch = Perm::T2.apply_chain(&sh4_chain(&ch)?)?;
    }
    for _ in 0..n {
        ch = Perm::T.apply_chain(&sh4_chain(&ch)?)?;
    }
    Ok(aw4_chain(&ch)?.normalized())
}

/// `(Aw ⊗ Aw) D_n` on `Δx` viewed in `(K^{×2})^{×2}`, mod 2.
fn fourfold_rhs(x: &Simplex, n: usize) -> Result<TensorChain<Z2>> {
    let mut ch: ProductChain<Z2> = Chain::basis(ProductSimplex::diag(x, 4));
    for _ in 0..n {
        ch = Perm::T.apply_chain(&ch.map_linear(|y| sh::<Z2>(y)))?;
    }
    let mut out = Chain::zero();
    for (y, _) in ch.iter() {
        for (t, _) in aw::<Z2>(y).iter() {
            for (u, _) in aw_split::<Z2>(&t.factors()[0], 1, Normalization::Eager).iter() {
                for (v, _) in aw_split::<Z2>(&t.factors()[1], 1, Normalization::Eager).iter() {
                    out.add_term(Tensor::new(u.factors().iter().chain(v.factors()).cloned()), Z2::ONE);
                }
            }
        }
    }
    Ok(out.normalized())
}

/// `μ(c_1 ⊗ c_2 ⊗ c_3 ⊗ c_4)` on a four-factor chain.
fn evaluate4(k: &SimplicialSet, cs: &[Cochain<Z2>; 4], tc: &TensorChain<Z2>) -> Z2 {
    let mut acc = Z2::ZERO;
    for (t, r) in tc.iter() {
        if r.is_zero() || t.factors().iter().zip(cs).any(|(f, c)| f.dim() != c.degree()) {
            continue;
        }
        let mut prod = Z2::ONE;
        for (f, c) in t.factors().iter().zip(cs) {
            prod = prod.mul(&c.value(k, &f.factor(0)));
        }
        acc = acc.add(&prod);
    }
    acc
}

fn fourfold_suite(seed: u64, samples: usize) -> Result<Vec<Check>> {
    let k = fixtures::simplex(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simplices: Vec<Simplex> = (0..=3).flat_map(|d| k.simplices(d).to_vec()).collect();
    let mut checks = Vec::new();
    for n in 0..=3 {
        let mut eval = Tally::new(format!("Aw_4 (t Sh_4)^{n} = D_{n} under c1⊗c2⊗c3⊗c4"));
        let mut chain = Tally::new(format!("Aw_4 (t Sh_4)^{n} = (Aw ⊗ Aw) D_{n} on chains"));
        let lhs: Vec<TensorChain<Z2>> = simplices.iter().map(|x| fourfold_lhs(x, n, false)).collect::<Result<_>>()?;
        for (x, l) in simplices.iter().zip(&lhs) {
            chain.record(*l == fourfold_rhs(x, n)?);
        }
        for _ in 0..samples {
            let m = rng.gen_range(0..=3usize);
            let mut degrees = [0usize; 4];
            for _ in 0..m + n {
                degrees[rng.gen_range(0..4)] += 1;
            }
            let cs = degrees.map(|d| random_cochain::<Z2>(&k, d, rng.gen()));
            let left = cup_i(&k, &cs[0], &cs[1], 0)?;
            let right = cup_i(&k, &cs[2], &cs[3], 0)?;
            let expected = cup_i(&k, &left, &right, n)?;
            let ok = simplices
                .iter()
                .zip(&lhs)
                .filter(|(x, _)| x.dim() == m)
                .all(|(x, l)| evaluate4(&k, &cs, l) == expected.value(&k, x));
            eval.record(ok);
        }
        checks.extend([chain.done(), eval.done()]);
    }
    for n in 1..=2 {
        let mut chain = Tally::new(format!("Aw_4 (t Sh_4)^{n} t2 Sh_4 = 0"));
        for x in &simplices {
            chain.record(fourfold_lhs(x, n, true)?.is_zero());
        }
        checks.push(chain.done());
    }
    Ok(checks)
}

/// A random word applicable to every simplex of dimension `dim`.
pub fn random_word(rng: &mut ChaCha8Rng, dim: usize, max_len: usize) -> OperatorWord {
    let len = rng.gen_range(0..=max_len);
    let mut d = dim;
    let mut ops = Vec::with_capacity(len);
    for _ in 0..len {
        if rng.gen_bool(0.5) && d > 0 {
            ops.push(Operator::Face(rng.gen_range(0..=d)));
            d -= 1;
        } else {
            ops.push(Operator::Degeneracy(rng.gen_range(0..=d)));
            d += 1;
        }
    }
    ops.reverse();
    OperatorWord::new(ops)
}

/// `(1 ⊗ Sh)(a ⊗ b) = (-1)^{|a|} a ⊗ Sh b`.
fn one_tensor_sh(tc: &TensorChain<Integer>) -> TensorChain<Integer> {
    let mut out = Chain::zero();
    for (t, r) in tc.iter() {
        let [a, b] = t.factors() else { unreachable!("pairs") };
        let sign = r.signed(a.dim() % 2 == 1);
        for (y, s) in sh::<Integer>(b).iter() {
            out.add_term(Tensor::pair(a.clone(), y.clone()), sign.mul(s));
        }
    }
    out
}

fn words_suite(seed: u64, samples: usize) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut normal = Tally::new("normal form: sorted, idempotent, same action on Δ^6");
    let mut unique = Tally::new("normal form: equal actions have equal normal forms");
    let probes = [Simplex::standard(6), Simplex::new(&[0, 0, 1, 3, 3, 4, 7]).expect("monotone")];
    let mut seen: rustc_hash::FxHashMap<Vec<Simplex>, OperatorWord> = Default::default();
    for _ in 0..samples {
        let w = random_word(&mut rng, 6, 10);
        let nf = w.normalize();
        let mut ok = nf.is_normal() && nf.normalize() == nf;
        let mut images = Vec::new();
        for x in &probes {
            let (a, b) = (w.apply(x)?, nf.apply(x)?);
            ok &= a == b;
            images.push(a);
        }
        normal.record(ok);
        // the standard simplex is generic, so its image determines the operator
        let key = vec![images[0].clone()];
        match seen.get(&key) {
            Some(other) => unique.record(*other == nf),
            None => {
                unique.record(true);
                seen.insert(key, nf);
            }
        }
    }
    checks.extend([normal.done(), unique.done()]);

    let mut deferred = Tally::new("degenerate summands vanish: deferred and eager normalization agree");
    let perms = [Perm::T, Perm::T2, Perm::Z];
    for a in perms {
        for b in perms {
            for c in perms {
                let w = vec![vec![a, b, c]];
                let eager = composite_formula(&w, 1, 1, Normalization::Eager, Exec::Sequential)?;
                let lazy = composite_formula(&w, 1, 1, Normalization::Deferred, Exec::Sequential)?;
                deferred.record(eager == lazy);
            }
        }
    }
    checks.push(deferred.done());

    let mut null = Tally::new("(1 ⊗ Sh) Aw z Sh = 0");
    let mut inputs = product_basis(4, 1, 4);
    inputs.extend((0..samples / 10).map(|_| {
        let d = rng.gen_range(1..=4);
        random_product(&mut rng, 4, 3, d)
    }));
    let results = Exec::default().map(&inputs, |x| -> Result<bool> {
        let s = Perm::Z.apply_chain(&sh_chain::<Integer>(&Chain::basis(x.clone())))?;
        Ok(one_tensor_sh(&aw_chain(&s)).is_zero())
    });
    for r in results {
        null.record(r?);
    }
    checks.push(null.done());

    let mut commute = Tally::new("Aw z Em = (Em ⊗ Em) z' (Aw ⊗ Aw)");
    for _ in 0..samples / 10 {
        let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let a = random_product(&mut rng, 2, 3, p);
        let b = random_product(&mut rng, 2, 3, q);
        let lhs = aw_chain(&Perm::Z.apply_chain(&em::<Integer>(&a, &b))?);
        let mut aw_aw: TensorChain<Integer> = Chain::zero();
        for (u, r) in aw::<Integer>(&a).iter() {
            for (v, s) in aw::<Integer>(&b).iter() {
                aw_aw.add_term(Tensor::new(u.factors().iter().chain(v.factors()).cloned()), r.mul(s));
            }
        }
        let mut rhs: TensorChain<Integer> = Chain::zero();
        for (t, r) in Perm::Z.apply_tensor(&aw_aw)?.iter() {
            let f = t.factors();
            for (x, s) in em::<Integer>(&f[0], &f[1]).iter() {
                for (y, u) in em::<Integer>(&f[2], &f[3]).iter() {
                    rhs.add_term(Tensor::pair(x.clone(), y.clone()), r.mul(s).mul(u));
                }
            }
        }
        commute.record(lhs == rhs);
    }
    checks.push(commute.done());

    let mut tilde = Tally::new("Sh t Sh = Sh t S~h");
    let mut xs = product_basis(2, 2, 4);
    xs.extend((0..samples / 10).map(|_| {
        let d = rng.gen_range(1..=5);
        random_product(&mut rng, 2, 4, d)
    }));
    for x in &xs {
        let full = Perm::T.apply_chain(&sh::<Integer>(x))?;
        let part = Perm::T.apply_chain(&sh_tilde::<Integer>(x))?;
        tilde.record(sh_chain(&full) == sh_chain(&part));
    }
    checks.push(tilde.done());
    Ok(checks)
}
