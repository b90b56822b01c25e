//! Buchberger engine and the ideal-theoretic operations built on it:
//! normal forms, reduced bases, membership, equality, intersection, and
//! saturation.
//!
//! The engine uses the normal selection strategy (minimal lcm degree first)
//! with the coprime-lead and chain criteria, entirely deterministic.
//! Intersections and saturations run through one auxiliary variable and an
//! elimination order, so the whole module rests on a single algorithm.

use crate::error::{Error, Result};
use crate::ideal::{GroebnerBasis, Ideal};
use crate::poly::{Polynomial, Term};
use crate::rat::Rat;
use crate::ring::{Monomial, MonomialOrder, Ring};
use num::traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

/// Engine guardrails. The pair cap counts every critical pair ever
/// generated and aborts loudly instead of hanging on runaway inputs.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub pair_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { pair_cap: 5000 }
    }
}

impl EngineConfig {
    /// A generous budget for elimination-heavy work (intersections chain
    /// auxiliary variables and mechanically double the generator count).
    pub fn large() -> Self {
        EngineConfig {
            pair_cap: 2_000_000,
        }
    }
}

// ---- working representation: term vectors sorted descending under the
// ---- active order

type WorkPoly = Vec<Term>;

fn to_work(p: &Polynomial, ord: &MonomialOrder) -> WorkPoly {
    p.sorted_terms(ord)
}

fn from_work(ring: &Ring, terms: WorkPoly) -> Polynomial {
    Polynomial::from_terms(ring, terms.into_iter().map(|t| (t.coeff, t.monomial)).collect())
}

fn work_is_zero(p: &WorkPoly) -> bool {
    p.is_empty()
}

/// `f - c * m * g`, all inputs sorted descending under `ord`.
fn sub_mul(f: &WorkPoly, c: &Rat, m: &Monomial, g: &WorkPoly, ord: &MonomialOrder) -> WorkPoly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        let gm = g[j].monomial.mul(m);
        match ord.cmp_mono(&f[i].monomial, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coeff: -(c * &g[j].coeff),
                    monomial: gm,
                });
                j += 1;
            }
            Ordering::Equal => {
                let coeff = &f[i].coeff - &(c * &g[j].coeff);
                if !coeff.is_zero() {
                    out.push(Term {
                        coeff,
                        monomial: gm,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push(Term {
            coeff: -(c * &g[j].coeff),
            monomial: g[j].monomial.mul(m),
        });
        j += 1;
    }
    out
}

fn make_monic(p: &mut WorkPoly) {
    if let Some(lead) = p.first().map(|t| t.coeff.clone()) {
        if !lead.is_one() {
            for t in p.iter_mut() {
                t.coeff = &t.coeff / &lead;
            }
        }
    }
}

/// Full normal form of `f` against `basis`: no term of the result is
/// divisible by any leading monomial of the basis.
fn normal_form(mut f: WorkPoly, basis: &[WorkPoly], ord: &MonomialOrder) -> WorkPoly {
    let mut out: WorkPoly = Vec::new();
    'outer: while !f.is_empty() {
        let lt = &f[0];
        for g in basis {
            if g.is_empty() {
                continue;
            }
            if let Some(q) = lt.monomial.try_div(&g[0].monomial) {
                let c = &lt.coeff / &g[0].coeff;
                f = sub_mul(&f, &c, &q, g, ord);
                continue 'outer;
            }
        }
        out.push(f.remove(0));
    }
    out
}

fn s_polynomial(f: &WorkPoly, g: &WorkPoly, ord: &MonomialOrder) -> WorkPoly {
    let lf = &f[0];
    let lg = &g[0];
    let lcm = lf.monomial.lcm(&lg.monomial);
    let mf = lcm.try_div(&lf.monomial).expect("lcm divisible");
    let mg = lcm.try_div(&lg.monomial).expect("lcm divisible");
    // (lcm/LT(f))*f - (lcm/LT(g))*g with monic scaling
    let scaled_f: WorkPoly = f
        .iter()
        .map(|t| Term {
            coeff: &t.coeff / &lf.coeff,
            monomial: t.monomial.mul(&mf),
        })
        .collect();
    let ratio = Rat::one() / lg.coeff.clone();
    sub_mul(&scaled_f, &ratio, &mg, g, ord)
}

struct PairQueue {
    // (lcm degree, i, j) — normal strategy pops the minimal lcm degree
    queue: BTreeSet<(u32, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    generated: usize,
    cap: usize,
}

impl PairQueue {
    fn new(cap: usize) -> Self {
        PairQueue {
            queue: BTreeSet::new(),
            pending: HashSet::new(),
            generated: 0,
            cap,
        }
    }

    fn push(&mut self, basis: &[WorkPoly], i: usize, j: usize) -> Result<()> {
        self.generated += 1;
        if self.generated > self.cap {
            return Err(Error::PairCapExceeded { cap: self.cap });
        }
        let deg = basis[i][0].monomial.lcm(&basis[j][0].monomial).degree();
        self.queue.insert((deg, i, j));
        self.pending.insert((i, j));
        Ok(())
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let &(d, i, j) = self.queue.iter().next()?;
        self.queue.remove(&(d, i, j));
        self.pending.remove(&(i, j));
        Some((i, j))
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pending.contains(&key)
    }
}

/// Chain criterion: the pair (i, j) is redundant if some other leading
/// monomial divides lcm(i, j) and both side pairs have already left the
/// queue.
fn chain_criterion(basis: &[WorkPoly], pairs: &PairQueue, i: usize, j: usize) -> bool {
    let lcm = basis[i][0].monomial.lcm(&basis[j][0].monomial);
    for (k, other) in basis.iter().enumerate() {
        if k == i || k == j || other.is_empty() {
            continue;
        }
        if other[0].monomial.divides(&lcm)
            && !pairs.is_pending(i.min(k), i.max(k))
            && !pairs.is_pending(j.min(k), j.max(k))
        {
            return true;
        }
    }
    false
}

fn buchberger_work(
    gens: Vec<WorkPoly>,
    ord: &MonomialOrder,
    cfg: &EngineConfig,
) -> Result<Vec<WorkPoly>> {
    let mut basis: Vec<WorkPoly> = Vec::new();
    for mut g in gens {
        if !g.is_empty() {
            make_monic(&mut g);
            basis.push(g);
        }
    }
    let mut pairs = PairQueue::new(cfg.pair_cap);
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(&basis, i, j)?;
        }
    }
    while let Some((i, j)) = pairs.pop() {
        if basis[i][0].monomial.is_coprime(&basis[j][0].monomial) {
            continue;
        }
        if chain_criterion(&basis, &pairs, i, j) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let mut r = normal_form(s, &basis, ord);
        if work_is_zero(&r) {
            continue;
        }
        make_monic(&mut r);
        basis.push(r);
        let m = basis.len() - 1;
        for k in 0..m {
            pairs.push(&basis, k, m)?;
        }
    }
    Ok(autoreduce_work(basis, ord))
}

/// Minimalizes and tail-reduces a Gröbner basis into the canonical reduced
/// form: monic elements, no leading term dividing any term of another
/// element, sorted ascending by leading monomial.
fn autoreduce_work(basis: Vec<WorkPoly>, ord: &MonomialOrder) -> Vec<WorkPoly> {
    let polys: Vec<WorkPoly> = basis.into_iter().filter(|p| !p.is_empty()).collect();
    // minimalize: drop an element whose leading monomial is divisible by
    // another's; among identical leading monomials keep the first
    let mut kept: Vec<WorkPoly> = Vec::new();
    for (i, g) in polys.iter().enumerate() {
        let gm = &g[0].monomial;
        let redundant = polys.iter().enumerate().any(|(j, h)| {
            let hm = &h[0].monomial;
            i != j && hm.divides(gm) && (hm != gm || j < i)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    // tail-reduce each against the rest
    let mut reduced: Vec<WorkPoly> = kept.clone();
    for idx in 0..reduced.len() {
        let me = reduced[idx].clone();
        let others: Vec<WorkPoly> = reduced
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let mut nf = normal_form(me, &others, ord);
        make_monic(&mut nf);
        reduced[idx] = nf;
    }
    reduced.retain(|p| !p.is_empty());
    reduced.sort_by(|a, b| ord.cmp_mono(&a[0].monomial, &b[0].monomial));
    reduced
}

// ---- public operations

/// Normal form of `f` with respect to `basis` under `ord`. With an empty
/// basis this returns `f` unchanged.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    for g in basis {
        if g.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
    }
    let work_basis: Vec<WorkPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_work(g, ord))
        .collect();
    let nf = normal_form(to_work(f, ord), &work_basis, ord);
    Ok(from_work(f.ring(), nf))
}

/// Reduced Gröbner basis of `ideal` under `ord` with the default pair cap.
pub fn buchberger(ideal: &Ideal, ord: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, ord, &EngineConfig::default())
}

pub fn buchberger_with(
    ideal: &Ideal,
    ord: &MonomialOrder,
    cfg: &EngineConfig,
) -> Result<GroebnerBasis> {
    let gens = ideal.generators().iter().map(|g| to_work(g, ord)).collect();
    let basis = buchberger_work(gens, ord, cfg)?;
    let elements = basis
        .into_iter()
        .map(|w| from_work(ideal.ring(), w))
        .collect();
    Ok(GroebnerBasis::from_parts(ord.clone(), elements, true))
}

/// Canonicalizes a set already known to be a Gröbner basis (minimalize +
/// tail-reduce + sort); no new S-pairs are examined.
pub fn reduce_basis(polys: &[Polynomial], ring: &Ring, ord: &MonomialOrder) -> GroebnerBasis {
    let work = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut w = to_work(p, ord);
            make_monic(&mut w);
            w
        })
        .collect();
    let basis = autoreduce_work(work, ord);
    let elements = basis.into_iter().map(|w| from_work(ring, w)).collect();
    GroebnerBasis::from_parts(ord.clone(), elements, true)
}

/// Ideal membership via normal form against a freshly computed basis.
pub fn member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    member_with(f, ideal, &EngineConfig::default())
}

pub fn member_with(f: &Polynomial, ideal: &Ideal, cfg: &EngineConfig) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let gb = buchberger_with(ideal, &MonomialOrder::Grevlex, cfg)?;
    member_of_basis(f, &gb)
}

/// Membership against an existing Gröbner basis.
pub fn member_of_basis(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    Ok(reduce(f, gb.elements(), gb.order())?.is_zero())
}

/// Ideal equality through reduced-basis uniqueness under grevlex.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    ideal_equal_with(a, b, &EngineConfig::default())
}

pub fn ideal_equal_with(a: &Ideal, b: &Ideal, cfg: &EngineConfig) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ga = buchberger_with(a, &MonomialOrder::Grevlex, cfg)?;
    let gb = buchberger_with(b, &MonomialOrder::Grevlex, cfg)?;
    Ok(ga.elements() == gb.elements())
}

fn extension_ring(ring: &Ring) -> Ring {
    let mut names = vec!["_t".to_string()];
    names.extend((0..ring.num_vars()).map(|i| ring.var_name(i).to_string()));
    Ring::with_names(names)
}

/// Restricts a basis over the extension ring back to the original ring,
/// keeping only elements free of the auxiliary variable. For a Gröbner basis
/// under the elimination order this yields a Gröbner basis of the
/// elimination ideal under grevlex.
fn eliminate_aux(gb: &GroebnerBasis, ring: &Ring) -> Result<Ideal> {
    let mut gens = Vec::new();
    for e in gb.elements() {
        if e.terms().iter().all(|t| t.monomial.exp(0) == 0) {
            gens.push(e.unshift_vars(ring, 1)?);
        }
    }
    let canon = reduce_basis(&gens, ring, &MonomialOrder::Grevlex);
    Ok(canon.to_ideal(ring))
}

/// Intersection `I ∩ J` via the auxiliary variable `t` and the elimination
/// ideal of `⟨t·I, (1−t)·J⟩`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    intersect_with(a, b, &EngineConfig::default())
}

pub fn intersect_with(a: &Ideal, b: &Ideal, cfg: &EngineConfig) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let ext = extension_ring(ring);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(&t * &f.shift_vars(&ext, 1));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.shift_vars(&ext, 1));
    }
    let ideal = Ideal::new(&ext, gens)?;
    let gb = buchberger_with(&ideal, &MonomialOrder::elimination(1), cfg)?;
    eliminate_aux(&gb, ring)
}

/// Saturation `I : f^∞` via `⟨I, 1 − y·f⟩ ∩ K[x]`.
pub fn colon_sat(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    colon_sat_with(ideal, f, &EngineConfig::default())
}

pub fn colon_sat_with(ideal: &Ideal, f: &Polynomial, cfg: &EngineConfig) -> Result<Ideal> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot saturate with respect to zero".into(),
        ));
    }
    let ring = ideal.ring();
    let ext = extension_ring(ring);
    let y = Polynomial::var(&ext, 0);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.shift_vars(&ext, 1))
        .collect();
    gens.push(&Polynomial::one(&ext) - &(&y * &f.shift_vars(&ext, 1)));
    let extended = Ideal::new(&ext, gens)?;
    let gb = buchberger_with(&extended, &MonomialOrder::elimination(1), cfg)?;
    eliminate_aux(&gb, ring)
}

/// Saturation with respect to the irrelevant ideal: the intersection of the
/// saturations `I : x_i^∞` over all variables.
pub fn saturate_irrelevant(ideal: &Ideal) -> Result<Ideal> {
    saturate_irrelevant_with(ideal, &EngineConfig::default())
}

pub fn saturate_irrelevant_with(ideal: &Ideal, cfg: &EngineConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut acc: Option<Ideal> = None;
    for i in 0..ring.num_vars() {
        let xi = Polynomial::var(ring, i);
        let sat = colon_sat_with(ideal, &xi, cfg)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => intersect_with(&prev, &sat, cfg)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::zero(ring)))
}
