//! 2x2 matrix groups over Z/9 and Z/3: lifts of the standard generators, the group G and its
//! determinant extension G', cusp orbits, coset permutation actions and genus computations.

use core::fmt;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Matrix (a b; c d) with entries reduced mod n, n in {3, 9}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatMod {
    pub n: u8,
    pub e: [u8; 4],
}

fn red(x: i64, n: u8) -> u8 {
    x.rem_euclid(n as i64) as u8
}

fn inv_unit(x: u8, n: u8) -> Option<u8> {
    (1..n).find(|&y| (x as u32 * y as u32) % n as u32 == 1)
}

impl MatMod {
    pub fn new(n: u8, a: i64, b: i64, c: i64, d: i64) -> Self {
        MatMod { n, e: [red(a, n), red(b, n), red(c, n), red(d, n)] }
    }

    pub fn identity(n: u8) -> Self {
        Self::new(n, 1, 0, 0, 1)
    }

    pub fn scalar(n: u8, l: i64) -> Self {
        Self::new(n, l, 0, 0, l)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        let [p, q, r, s] = o.e.map(|x| x as i64);
        Self::new(self.n, a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)
    }

    pub fn det(&self) -> u8 {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        red(a * d - b * c, self.n)
    }

    pub fn trace(&self) -> u8 {
        red(self.e[0] as i64 + self.e[3] as i64, self.n)
    }

    pub fn is_invertible(&self) -> bool {
        inv_unit(self.det(), self.n).is_some()
    }

    pub fn inv(&self) -> Option<Self> {
        let di = inv_unit(self.det(), self.n)? as i64;
        let [a, b, c, d] = self.e.map(|x| x as i64);
        Some(Self::new(self.n, d * di, -b * di, -c * di, a * di))
    }

    pub fn neg(&self) -> Self {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        Self::new(self.n, -a, -b, -c, -d)
    }

    pub fn scale(&self, l: i64) -> Self {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        Self::new(self.n, l * a, l * b, l * c, l * d)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn reduce(&self, m: u8) -> Self {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        Self::new(m, a, b, c, d)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Canonical representative of the class {g, -g}.
    pub fn proj(&self) -> Self {
        core::cmp::min(*self, self.neg())
    }

    /// Multiplicative order (of the matrix itself, not its projective class).
    pub fn order(&self) -> usize {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// Order of the class of g in PGL / PSL (smallest k with g^k = +-I).
    pub fn proj_order(&self) -> usize {
        let id = Self::identity(self.n);
        let mut x = *self;
        let mut k = 1;
        while x != id && x != id.neg() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// Left multiplication on a column vector.
    pub fn act(&self, v: (u8, u8)) -> (u8, u8) {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        let (x, y) = (v.0 as i64, v.1 as i64);
        (red(a * x + b * y, self.n), red(c * x + d * y, self.n))
    }

    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.mul(self).mul(&x.inv().expect("invertible conjugator"))
    }
}

impl fmt::Display for MatMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.e[0], self.e[1], self.e[2], self.e[3])
    }
}

impl fmt::Debug for MatMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The standard generators S = (0 -1; 1 0) and T = (1 1; 0 1) mod n.
pub fn standard_s(n: u8) -> MatMod {
    MatMod::new(n, 0, -1, 1, 0)
}

pub fn standard_t(n: u8) -> MatMod {
    MatMod::new(n, 1, 1, 0, 1)
}

/// A finite matrix group stored as its full element set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    pub n: u8,
    pub gens: Vec<MatMod>,
    pub elements: BTreeSet<MatMod>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &MatMod) -> bool {
        self.elements.contains(g)
    }

    pub fn is_subgroup_of(&self, o: &Subgroup) -> bool {
        self.elements.is_subset(&o.elements)
    }

    pub fn is_normalized_by(&self, h: &MatMod) -> bool {
        self.gens.iter().all(|g| self.contains(&g.conjugate_by(h)))
    }

    /// Image in PGL as canonical +-classes.
    pub fn projective(&self) -> ProjGroup {
        ProjGroup { n: self.n, elements: self.elements.iter().map(|g| g.proj()).collect() }
    }

    pub fn reduce(&self, m: u8) -> BTreeSet<MatMod> {
        self.elements.iter().map(|g| g.reduce(m)).collect()
    }
}

/// Breadth-first closure of a generating set.
pub fn closure(n: u8, gens: &[MatMod]) -> Result<Subgroup> {
    if gens.iter().any(|g| !g.is_invertible()) {
        return Err(Error::NonInvertibleGenerator);
    }
    let id = MatMod::identity(n);
    let mut elements = BTreeSet::new();
    elements.insert(id);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if elements.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(Subgroup { n, gens: gens.to_vec(), elements })
}

fn all_matrices(n: u8) -> impl Iterator<Item = MatMod> {
    (0..(n as u32).pow(4)).map(move |k| {
        let n32 = n as u32;
        let e = [k % n32, (k / n32) % n32, (k / n32 / n32) % n32, k / n32 / n32 / n32].map(|x| x as u8);
        MatMod { n, e }
    })
}

pub fn gl2(n: u8) -> Vec<MatMod> {
    all_matrices(n).filter(|m| m.is_invertible()).collect()
}

pub fn sl2(n: u8) -> Vec<MatMod> {
    all_matrices(n).filter(|m| m.det() == 1).collect()
}

/// SL2 as a Subgroup value.
pub fn sl2_group(n: u8) -> Subgroup {
    let elements: BTreeSet<MatMod> = sl2(n).into_iter().collect();
    Subgroup { n, gens: alloc::vec![standard_s(n), standard_t(n)], elements }
}

/// All lifts of a matrix mod 3 to Z/9.
pub fn lifts_mod9(m3: &MatMod) -> Vec<MatMod> {
    let mut out = Vec::with_capacity(81);
    for k in 0..81u32 {
        let off = [k % 3, (k / 3) % 3, (k / 9) % 3, k / 27].map(|x| 3 * x as i64);
        let [a, b, c, d] = m3.e.map(|x| x as i64);
        out.push(MatMod::new(9, a + off[0], b + off[1], c + off[2], d + off[3]));
    }
    out
}

pub type LiftPair = (MatMod, MatMod);

/// Pairs in SL2(Z/9) lifting (s, t) mod 3 with s'^2 = (s't')^3 = -I and t'^3 = I.
pub fn lift_search_for(s: &MatMod, t: &MatMod) -> Vec<LiftPair> {
    let minus = MatMod::scalar(9, -1);
    let id = MatMod::identity(9);
    let ss: Vec<MatMod> = lifts_mod9(s).into_iter().filter(|x| x.det() == 1 && x.mul(x) == minus).collect();
    let ts: Vec<MatMod> = lifts_mod9(t).into_iter().filter(|y| y.det() == 1 && y.pow(3) == id).collect();
    let mut out = Vec::new();
    for x in &ss {
        for y in &ts {
            if x.mul(y).pow(3) == minus {
                out.push((*x, *y));
            }
        }
    }
    out
}

/// Result of the lift search with the determinant-extension filter.
#[derive(Clone, Debug)]
pub struct LiftSearch {
    /// Every pair in SL2(Z/9) satisfying the relations.
    pub pairs: Vec<LiftPair>,
    /// Pairs whose group is normalized by an element of determinant -1, i.e. admits G'.
    pub admissible: Vec<LiftPair>,
    /// Simultaneous SL2(Z/9)-conjugacy classes among the pairs.
    pub classes: usize,
}

fn has_det_minus_one_normalizer(g: &Subgroup) -> bool {
    gl2(9).iter().filter(|h| h.det() == 8).any(|h| g.is_normalized_by(h))
}

/// Lift search for the standard S, T with the admissibility filter.
pub fn lift_search() -> LiftSearch {
    let pairs = lift_search_for(&standard_s(3), &standard_t(3));
    let admissible = pairs
        .iter()
        .filter(|(s, t)| has_det_minus_one_normalizer(&closure(9, &[*s, *t]).expect("invertible")))
        .copied()
        .collect();
    let classes = conjugacy_classes_of_pairs(&pairs).len();
    LiftSearch { pairs, admissible, classes }
}

/// Partition of pairs into simultaneous SL2(Z/9)-conjugacy classes.
pub fn conjugacy_classes_of_pairs(pairs: &[LiftPair]) -> Vec<Vec<LiftPair>> {
    let sl = sl2(9);
    let all: BTreeSet<LiftPair> = pairs.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for p in pairs {
        if seen.contains(p) {
            continue;
        }
        let mut class = BTreeSet::new();
        for x in &sl {
            let q = (p.0.conjugate_by(x), p.1.conjugate_by(x));
            if all.contains(&q) {
                class.insert(q);
            }
        }
        seen.extend(class.iter().copied());
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Some x in SL2(Z/9) with x p x^-1 = q componentwise.
pub fn simultaneous_conjugator(p: &LiftPair, q: &LiftPair) -> Option<MatMod> {
    sl2(9).into_iter().find(|x| p.0.conjugate_by(x) == q.0 && p.1.conjugate_by(x) == q.1)
}

/// True iff reduction mod 3 maps H bijectively onto SL2(Z/3).
pub fn reduction_bijective(h: &Subgroup) -> bool {
    let img = h.reduce(3);
    img.len() == h.order() && img.len() == sl2(3).len() && img.iter().all(|m| m.det() == 1)
}

/// The group G' together with the normalizing lifts found.
#[derive(Clone, Debug)]
pub struct GPrime {
    pub group: Subgroup,
    /// All lifts of +-diag(-1, 1) mod 3 that normalize G.
    pub normalizing_lifts: Vec<MatMod>,
}

/// Adjoin scalars and the lift of +-diag(-1,1) normalizing G; checks that this lift is unique
/// up to scalars, that G is normal in G' and that det identifies G'/G with (Z/9)^*.
pub fn extend_to_gprime(g: &Subgroup) -> Result<GPrime> {
    let targets = [MatMod::new(3, -1, 0, 0, 1), MatMod::new(3, 1, 0, 0, -1)];
    let mut lifts: Vec<MatMod> = targets
        .iter()
        .flat_map(lifts_mod9)
        .filter(|h| h.is_invertible() && g.is_normalized_by(h))
        .collect();
    lifts.sort();
    if lifts.is_empty() {
        return Err(Error::NormalizingLift("none found".into()));
    }
    let base = MatMod::new(9, -1, 0, 0, 1);
    let scalar_class: BTreeSet<MatMod> = units_mod9().iter().map(|&u| base.scale(u as i64)).collect();
    if lifts.iter().copied().collect::<BTreeSet<_>>() != scalar_class {
        return Err(Error::NormalizingLift("not unique up to scalars".into()));
    }
    let mut gens = g.gens.clone();
    gens.push(MatMod::scalar(9, 2));
    gens.push(base);
    let gp = closure(9, &gens)?;
    let sl_part: BTreeSet<MatMod> = gp.elements.iter().filter(|m| m.det() == 1).copied().collect();
    if sl_part != g.elements {
        return Err(Error::NormalizingLift("G' meets SL2 in more than G".into()));
    }
    let dets: BTreeSet<u8> = gp.elements.iter().map(|m| m.det()).collect();
    if dets.len() != 6 || gp.order() != 6 * g.order() {
        return Err(Error::NormalizingLift("det does not identify G'/G with the units".into()));
    }
    if !gp.elements.iter().all(|h| g.is_normalized_by(h)) {
        return Err(Error::NormalizingLift("G is not normal in G'".into()));
    }
    Ok(GPrime { group: gp, normalizing_lifts: lifts })
}

pub fn units_mod9() -> [u8; 6] {
    [1, 2, 4, 5, 7, 8]
}

/// True iff some +-(a b; 0 1) lies in the group.
pub fn borel_membership(gp: &Subgroup, a: u8) -> Result<bool> {
    if inv_unit(a % 9, 9).is_none() {
        return Err(Error::NotAUnit(a as i64));
    }
    Ok((0..9).any(|b| {
        let m = MatMod::new(9, a as i64, b, 0, 1);
        gp.contains(&m) || gp.contains(&m.neg())
    }))
}

/// Canonical representative of +-(a, b) in (Z/9)^2, gcd with 3 trivial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CuspClass(pub u8, pub u8);

impl CuspClass {
    pub fn new(a: i64, b: i64) -> Option<Self> {
        let (a, b) = (red(a, 9), red(b, 9));
        if a % 3 == 0 && b % 3 == 0 {
            return None;
        }
        let m = (red(-(a as i64), 9), red(-(b as i64), 9));
        Some(if (a, b) <= m { CuspClass(a, b) } else { CuspClass(m.0, m.1) })
    }

    pub fn all() -> Vec<CuspClass> {
        let mut v: BTreeSet<CuspClass> = BTreeSet::new();
        for a in 0..9 {
            for b in 0..9 {
                if let Some(c) = CuspClass::new(a, b) {
                    v.insert(c);
                }
            }
        }
        v.into_iter().collect()
    }

    pub fn act(&self, g: &MatMod) -> CuspClass {
        let (a, b) = g.act((self.0, self.1));
        CuspClass::new(a as i64, b as i64).expect("action preserves primitivity")
    }

    pub fn scale(&self, u: i64) -> CuspClass {
        CuspClass::new(self.0 as i64 * u, self.1 as i64 * u).expect("unit scaling")
    }
}

impl fmt::Display for CuspClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Orbit of a cusp class under a set of matrices acting on column vectors.
pub fn cusp_orbit(g: &Subgroup, c: CuspClass) -> BTreeSet<CuspClass> {
    g.elements.iter().map(|m| c.act(m)).collect()
}

/// Orbit partition of the 36 cusp classes, each orbit sorted, with stabilizer orders in G/+-1.
pub fn cusp_orbits(g: &Subgroup) -> Vec<(Vec<CuspClass>, usize)> {
    let pg = g.projective().order();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in CuspClass::all() {
        if seen.contains(&c) {
            continue;
        }
        let orb = cusp_orbit(g, c);
        seen.extend(orb.iter().copied());
        let stab = pg / orb.len();
        out.push((orb.into_iter().collect(), stab));
    }
    out
}

/// A subgroup of PSL2 / PGL2 stored as canonical +-classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjGroup {
    pub n: u8,
    pub elements: BTreeSet<MatMod>,
}

impl ProjGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn trivial(n: u8) -> Self {
        ProjGroup { n, elements: BTreeSet::from([MatMod::identity(n).proj()]) }
    }
}

pub fn psl2(n: u8) -> Vec<MatMod> {
    let set: BTreeSet<MatMod> = sl2(n).iter().map(|m| m.proj()).collect();
    set.into_iter().collect()
}

/// Multiset of cycle lengths, keyed by length.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CycleType(pub BTreeMap<usize, usize>);

impl CycleType {
    pub fn from_lengths(lengths: &[(usize, usize)]) -> Self {
        let mut m = BTreeMap::new();
        for &(l, c) in lengths {
            *m.entry(l).or_insert(0) += c;
        }
        CycleType(m)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|(l, c)| l * c).sum()
    }

    /// Contribution sum (length - 1) to the Riemann-Hurwitz formula.
    pub fn ramification(&self) -> usize {
        self.0.iter().map(|(l, c)| (l - 1) * c).sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(|(l, c)| alloc::format!("{l}^{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Right cosets H x of H in PSL2(Z/n), with a lookup from element to coset index.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub index: usize,
    coset_of: BTreeMap<MatMod, usize>,
}

impl CosetAction {
    pub fn new(h: &ProjGroup) -> Self {
        let mut coset_of = BTreeMap::new();
        let mut index = 0;
        for x in psl2(h.n) {
            if coset_of.contains_key(&x) {
                continue;
            }
            for y in &h.elements {
                coset_of.insert(y.mul(&x).proj(), index);
            }
            index += 1;
        }
        CosetAction { index, coset_of }
    }

    /// Permutation of cosets induced by right multiplication with g.
    pub fn permutation(&self, g: &MatMod) -> Vec<usize> {
        let mut perm = alloc::vec![usize::MAX; self.index];
        for (x, &i) in &self.coset_of {
            let j = self.coset_of[&x.mul(g).proj()];
            debug_assert!(perm[i] == usize::MAX || perm[i] == j, "action well defined");
            perm[i] = j;
        }
        perm
    }

    pub fn cycle_type(&self, g: &MatMod) -> CycleType {
        let perm = self.permutation(g);
        let mut seen = alloc::vec![false; perm.len()];
        let mut m = BTreeMap::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
                len += 1;
            }
            *m.entry(len).or_insert(0) += 1;
        }
        CycleType(m)
    }
}

pub fn coset_cycle_type(h: &ProjGroup, g: &MatMod) -> CycleType {
    CosetAction::new(h).cycle_type(g)
}

/// Riemann-Hurwitz genus of a cover of the j-line branched over three points.
pub fn genus_from_cover(degree: usize, ctypes: &[CycleType]) -> Result<i64> {
    if ctypes.iter().any(|c| c.degree() != degree) {
        return Err(Error::InconsistentCycleTypes);
    }
    let r: i64 = ctypes.iter().map(|c| c.ramification() as i64).sum();
    let twice = r - 2 * degree as i64 + 2;
    if twice % 2 != 0 || twice < 0 {
        return Err(Error::NonIntegralGenus);
    }
    Ok(twice / 2)
}

/// Genus of the quotient of X(9) by a projective subgroup, from the coset action of T, ST, S.
pub fn genus_of_quotient(h: &ProjGroup) -> Result<(usize, [CycleType; 3], i64)> {
    let act = CosetAction::new(h);
    let s = standard_s(h.n);
    let t = standard_t(h.n);
    let types = [act.cycle_type(&t), act.cycle_type(&s.mul(&t)), act.cycle_type(&s)];
    let g = genus_from_cover(act.index, &types)?;
    Ok((act.index, types, g))
}

/// Points of X(9) over j = 1728 (order 2) or j = 0 (order 3) fixed by g, counted as left
/// cosets x C of C = <S> or <ST> in PSL2(Z/9) with x^-1 g x in C.
pub fn fixed_points_in_fibers(g: &MatMod) -> Result<usize> {
    let n = g.n;
    let gen = match g.proj_order() {
        2 => standard_s(n),
        3 => standard_s(n).mul(&standard_t(n)),
        k => return Err(Error::UnsupportedOrder(k)),
    };
    let c: BTreeSet<MatMod> = (0..gen.proj_order() as u32).map(|k| gen.pow(k).proj()).collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for x in psl2(n) {
        if seen.contains(&x) {
            continue;
        }
        for y in &c {
            seen.insert(x.mul(y).proj());
        }
        let xi = x.inv().expect("invertible");
        if c.contains(&xi.mul(g).mul(&x).proj()) {
            count += 1;
        }
    }
    Ok(count)
}

/// The group printed with the corrected upper-right entry of the second generator.
pub fn g_generators() -> LiftPair {
    (MatMod::new(9, 0, 2, 4, 0), MatMod::new(9, 4, 4, -3, 4))
}

/// The generator pair exactly as printed.
pub fn printed_generators() -> LiftPair {
    (MatMod::new(9, 0, 2, 4, 0), MatMod::new(9, 4, 1, -3, 4))
}

pub fn group_g() -> Subgroup {
    let (s, t) = g_generators();
    closure(9, &[s, t]).expect("invertible generators")
}

/// The element 3T' - 2 = (1 3; 0 1), acting on the quotient by <T'> with order 3.
pub fn sigma_element() -> MatMod {
    MatMod::new(9, 1, 3, 0, 1)
}

/// Group-theoretic data for the order-3 automorphism of X(9)/<T'>.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaData {
    pub equals_3t_minus_2: bool,
    pub commutes_with_t: bool,
    pub proj_order: usize,
    pub outside_t: bool,
    /// Order of <T', sigma> in PSL2(Z/9).
    pub joint_order: usize,
    /// Index and genus of X(9)/<T', sigma> over the j-line.
    pub quotient_degree: usize,
    pub quotient_genus: i64,
    /// <T', sigma> reduces into the upper or lower Borel mod 3, whose index is 4.
    pub in_level3_borel: bool,
}

pub fn sigma_data() -> Result<SigmaData> {
    let t = g_generators().1;
    let s = sigma_element();
    let [a, b, c, d] = t.e.map(|x| 3 * x as i64);
    let three_t_minus_2 = MatMod::new(9, a - 2, b, c, d - 2);
    let tg = closure(9, &[t])?;
    let joint = closure(9, &[t, s])?;
    let pj = joint.projective();
    let (deg, _, genus) = genus_of_quotient(&pj)?;
    let upper = joint.elements.iter().all(|m| m.e[2] % 3 == 0);
    let lower = joint.elements.iter().all(|m| m.e[1] % 3 == 0);
    Ok(SigmaData {
        equals_3t_minus_2: three_t_minus_2 == s,
        commutes_with_t: s.mul(&t) == t.mul(&s),
        proj_order: s.proj_order(),
        outside_t: !tg.contains(&s) && !tg.contains(&s.neg()),
        joint_order: pj.order(),
        quotient_degree: deg,
        quotient_genus: genus,
        in_level3_borel: upper || lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_orders() {
        assert_eq!(sl2(9).len(), 648);
        assert_eq!(sl2(3).len(), 24);
        assert_eq!(gl2(3).len(), 48);
        assert_eq!(psl2(9).len(), 324);
        assert_eq!(CuspClass::all().len(), 36);
        let g = group_g();
        assert_eq!(g.order(), 24);
        assert!(reduction_bijective(&g));
        let t = closure(9, &[g_generators().1]).unwrap();
        assert_eq!(t.order(), 3);
        assert!(!reduction_bijective(&t));
        assert!(!reduction_bijective(&sl2_group(9)));
    }

    #[test]
    fn non_invertible_generator() {
        assert_eq!(closure(9, &[MatMod::new(9, 3, 0, 0, 1)]), Err(Error::NonInvertibleGenerator));
    }

    #[test]
    fn printed_pair_relations() {
        let (s, t) = printed_generators();
        let minus = MatMod::scalar(9, -1);
        assert_eq!(s.mul(&s), minus);
        assert_ne!(s.mul(&t).pow(3), minus);
        let (s, t) = g_generators();
        assert_eq!(s.mul(&t).pow(3), minus);
        assert!(t.pow(3).is_identity());
    }

    #[test]
    fn cycle_types_and_genus() {
        let pg = group_g().projective();
        let (deg, types, genus) = genus_of_quotient(&pg).unwrap();
        assert_eq!(deg, 27);
        assert_eq!(alloc::format!("{}", types[0]), "9^3");
        assert_eq!(alloc::format!("{}", types[1]), "3^8 1^3");
        assert_eq!(alloc::format!("{}", types[2]), "2^12 1^3");
        assert_eq!(genus, 0);
        assert_eq!(genus_from_cover(3, &[CycleType::from_lengths(&[(2, 1)])]), Err(Error::InconsistentCycleTypes));
    }

    #[test]
    fn fixed_points() {
        let g = group_g().projective();
        let mut total = 0;
        for m in &g.elements {
            if m.proj_order() == 1 {
                continue;
            }
            let f = fixed_points_in_fibers(m).unwrap();
            assert_eq!(f, if m.proj_order() == 2 { 6 } else { 3 });
            total += f;
        }
        assert_eq!(total, 42);
        assert_eq!(fixed_points_in_fibers(&standard_t(9)), Err(Error::UnsupportedOrder(9)));
    }
}

#[cfg(test)]
mod search_tests {
    use super::*;

    #[test]
    fn lift_search_counts() {
        let r = lift_search();
        assert_eq!(r.pairs.len(), 27);
        assert_eq!(r.admissible.len(), 27);
        assert_eq!(r.classes, 1);
        assert!(r.pairs.contains(&g_generators()));
        assert!(!r.pairs.contains(&printed_generators()));
        // the literal S printed with the opposite sign convention gives nothing
        assert!(lift_search_for(&MatMod::new(3, 0, 1, -1, 0), &standard_t(3)).is_empty());
        let g = g_generators();
        for p in &r.admissible {
            assert!(simultaneous_conjugator(&g, p).is_some());
        }
    }

    #[test]
    fn gprime() {
        let g = group_g();
        let gp = extend_to_gprime(&g).unwrap();
        assert_eq!(gp.group.order(), 144);
        assert_eq!(gp.normalizing_lifts.len(), 6);
        for a in units_mod9() {
            assert_eq!(borel_membership(&gp.group, a).unwrap(), a == 1 || a == 8, "a = {a}");
        }
        assert_eq!(borel_membership(&gp.group, 3), Err(Error::NotAUnit(3)));
    }

    #[test]
    fn cusps() {
        let orbits = cusp_orbits(&group_g());
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|(o, stab)| o.len() == 12 && *stab == 1));
        let t = closure(9, &[g_generators().1]).unwrap();
        let orb = cusp_orbit(&t, CuspClass(1, 0));
        assert_eq!(orb, BTreeSet::from([CuspClass(1, 0), CuspClass(4, 6), CuspClass(4, 3)]));
        // scaling by 4 permutes the three orbits transitively
        let first: BTreeSet<CuspClass> = orbits[0].0.iter().copied().collect();
        let moved: BTreeSet<CuspClass> = first.iter().map(|c| c.scale(4)).collect();
        let moved2: BTreeSet<CuspClass> = moved.iter().map(|c| c.scale(4)).collect();
        assert!(first != moved && moved != moved2 && first != moved2);
        assert!(orbits.iter().any(|(o, _)| o.iter().copied().collect::<BTreeSet<_>>() == moved));
    }
}

#[cfg(test)]
mod genus_tests {
    use super::*;

    #[test]
    fn full_level_and_t_quotient() {
        let (deg, _, g) = genus_of_quotient(&ProjGroup::trivial(9)).unwrap();
        assert_eq!((deg, g), (324, 10));
        let t = closure(9, &[g_generators().1]).unwrap().projective();
        let (deg, _, g) = genus_of_quotient(&t).unwrap();
        assert_eq!((deg, g), (108, 3));
    }

    #[test]
    fn sigma_descends_to_genus_zero_quotient() {
        let d = sigma_data().unwrap();
        assert!(d.equals_3t_minus_2 && d.commutes_with_t && d.outside_t && d.in_level3_borel);
        assert_eq!(d.proj_order, 3);
        assert_eq!((d.joint_order, d.quotient_degree, d.quotient_genus), (9, 36, 0));
        // Borel mod 3 has index 4 in PSL2(Z/3), so the z1-line maps to X0(3) with degree 9.
        assert_eq!(d.quotient_degree / 4, 9);
    }
}
