//! Principal ideals, Green's relations and egg-box diagrams.
//!
//! `L`, `R` and `J` classes come either from comparing principal ideals
//! directly or from the strongly connected components of the translation
//! graphs (`s -> x*s` for `L`, `s -> s*x` for `R`, both for `J`); the two
//! methods must agree. `H` is the meet of `L` and `R`, `D` their join.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::subset::{Role, SubsetHandle};

/// Largest order for which the automatic method compares principal ideals.
pub const NAIVE_METHOD_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    L,
    R,
    J,
    H,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Equality of principal ideals.
    PrincipalIdeals,
    /// Strongly connected components of the translation graph.
    Reachability,
    /// `PrincipalIdeals` up to [`NAIVE_METHOD_LIMIT`], `Reachability` above.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeals {
    pub left: SubsetHandle,
    pub right: SubsetHandle,
    pub two_sided: SubsetHandle,
}

/// `S¹s`, `sS¹` and `S¹sS¹`.
pub fn principal_ideals(s: &FiniteSemigroup, x: usize) -> Result<PrincipalIdeals> {
    s.check_element(x)?;
    Ok(PrincipalIdeals {
        left: SubsetHandle::new(s, s.principal_left(x).iter(), Role::LeftIdeal)?,
        right: SubsetHandle::new(s, s.principal_right(x).iter(), Role::RightIdeal)?,
        two_sided: SubsetHandle::new(s, s.principal_two_sided(x).iter(), Role::TwoSidedIdeal)?,
    })
}

/// One D-class drawn as a grid: rows are its R-classes, columns its
/// L-classes, cells the H-classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggBox {
    pub d_class: usize,
    pub r_classes: Vec<usize>,
    pub l_classes: Vec<usize>,
    pub cells: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreensStructure {
    order: usize,
    l_class: Vec<usize>,
    r_class: Vec<usize>,
    j_class: Vec<usize>,
    h_class: Vec<usize>,
    d_class: Vec<usize>,
    eggbox: Vec<EggBox>,
}

/// Relabels class ids densely, in order of each class's least element.
fn normalize(raw: &[usize]) -> Vec<usize> {
    let mut ids = HashMap::new();
    raw.iter()
        .map(|r| {
            let next = ids.len();
            *ids.entry(*r).or_insert(next)
        })
        .collect()
}

/// Iterative Tarjan over an implicit graph where `succ(v, k)` is the
/// `k`-th successor of `v`, for `k < degree`.
fn strongly_connected(n: usize, degree: usize, succ: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut comps = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = frames.last_mut() {
            if *k < degree {
                let w = succ(v, *k);
                *k += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
        }
    }
    normalize(&comp)
}

fn partition_by_sets(n: usize, ideal: impl Fn(usize) -> ElementSet) -> Vec<usize> {
    let mut ids: HashMap<ElementSet, usize> = HashMap::new();
    (0..n)
        .map(|x| {
            let next = ids.len();
            *ids.entry(ideal(x)).or_insert(next)
        })
        .collect()
}

/// Class array of one of `L`, `R`, `J` by the chosen method.
pub fn one_sided_partition(s: &FiniteSemigroup, relation: Relation, method: Method) -> Vec<usize> {
    let n = s.order();
    let method = match method {
        Method::Auto if n <= NAIVE_METHOD_LIMIT => Method::PrincipalIdeals,
        Method::Auto => Method::Reachability,
        m => m,
    };
    match (relation, method) {
        (Relation::L, Method::PrincipalIdeals) => partition_by_sets(n, |x| s.principal_left(x)),
        (Relation::R, Method::PrincipalIdeals) => partition_by_sets(n, |x| s.principal_right(x)),
        (Relation::J, Method::PrincipalIdeals) => {
            partition_by_sets(n, |x| s.principal_two_sided(x))
        }
        (Relation::L, _) => strongly_connected(n, n, |v, k| s.mul(k, v)),
        (Relation::R, _) => strongly_connected(n, n, |v, k| s.mul(v, k)),
        (Relation::J, _) => {
            strongly_connected(
                n,
                2 * n,
                |v, k| {
                    if k < n {
                        s.mul(k, v)
                    } else {
                        s.mul(v, k - n)
                    }
                },
            )
        }
        (Relation::H | Relation::D, _) => {
            let g = greens_structure_with(s, method);
            g.classes(relation).to_vec()
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Class members grouped by id.
pub fn members_of(classes: &[usize]) -> Vec<Vec<usize>> {
    let count = classes.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (x, &c) in classes.iter().enumerate() {
        out[c].push(x);
    }
    out
}

pub fn greens_structure(s: &FiniteSemigroup) -> GreensStructure {
    greens_structure_with(s, Method::Auto)
}

pub fn greens_structure_with(s: &FiniteSemigroup, method: Method) -> GreensStructure {
    let n = s.order();
    let l_class = one_sided_partition(s, Relation::L, method);
    let r_class = one_sided_partition(s, Relation::R, method);
    let j_class = one_sided_partition(s, Relation::J, method);
    let h_class = normalize(
        &(0..n)
            .map(|x| l_class[x] * n + r_class[x])
            .collect::<Vec<_>>(),
    );
    let mut parent: Vec<usize> = (0..n).collect();
    for classes in [&l_class, &r_class] {
        let mut first = HashMap::new();
        for (x, c) in classes.iter().enumerate() {
            let rep = *first.entry(*c).or_insert(x);
            let (a, b) = (find(&mut parent, rep), find(&mut parent, x));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let d_class = normalize(&roots);
    let eggbox = build_eggboxes(&d_class, &r_class, &l_class);
    GreensStructure {
        order: n,
        l_class,
        r_class,
        j_class,
        h_class,
        d_class,
        eggbox,
    }
}

fn build_eggboxes(d_class: &[usize], r_class: &[usize], l_class: &[usize]) -> Vec<EggBox> {
    members_of(d_class)
        .into_iter()
        .enumerate()
        .map(|(d, members)| {
            let mut r_classes: Vec<usize> = members.iter().map(|&x| r_class[x]).collect();
            let mut l_classes: Vec<usize> = members.iter().map(|&x| l_class[x]).collect();
            r_classes.sort_unstable();
            r_classes.dedup();
            l_classes.sort_unstable();
            l_classes.dedup();
            let mut cells = vec![vec![Vec::new(); l_classes.len()]; r_classes.len()];
            for &x in &members {
                let row = r_classes.binary_search(&r_class[x]).unwrap();
                let col = l_classes.binary_search(&l_class[x]).unwrap();
                cells[row][col].push(x);
            }
            EggBox {
                d_class: d,
                r_classes,
                l_classes,
                cells,
            }
        })
        .collect()
}

fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let mut image = HashMap::new();
    fine.iter()
        .zip(coarse)
        .all(|(f, c)| *image.entry(*f).or_insert(*c) == *c)
}

impl GreensStructure {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classes(&self, relation: Relation) -> &[usize] {
        match relation {
            Relation::L => &self.l_class,
            Relation::R => &self.r_class,
            Relation::J => &self.j_class,
            Relation::H => &self.h_class,
            Relation::D => &self.d_class,
        }
    }

    pub fn class_of(&self, relation: Relation, x: usize) -> usize {
        self.classes(relation)[x]
    }

    pub fn related(&self, relation: Relation, a: usize, b: usize) -> bool {
        let c = self.classes(relation);
        c[a] == c[b]
    }

    pub fn class_members(&self, relation: Relation) -> Vec<Vec<usize>> {
        members_of(self.classes(relation))
    }

    pub fn class_count(&self, relation: Relation) -> usize {
        self.classes(relation).iter().max().map_or(0, |m| m + 1)
    }

    pub fn eggbox(&self) -> &[EggBox] {
        &self.eggbox
    }

    pub fn h_class_handle(&self, x: usize) -> SubsetHandle {
        let c = self.h_class[x];
        let members = (0..self.order).filter(|&y| self.h_class[y] == c).collect();
        SubsetHandle::trusted(self.order, members, Role::HClass)
    }

    /// `x (R∘L) y` iff some `z` has `x R z L y`, i.e. `R_x` meets `L_y`.
    fn r_meets_l(&self) -> HashMap<(usize, usize), ()> {
        (0..self.order)
            .map(|z| ((self.r_class[z], self.l_class[z]), ()))
            .collect()
    }

    /// Whether `R∘L`, `L∘R` and the computed `D` are one relation.
    pub fn compositions_agree(&self) -> bool {
        let meets = self.r_meets_l();
        // R∘L ⊆ D and L∘R ⊆ D always; the converse needs every
        // (R-class, L-class) pair inside a D-class to meet.
        self.eggbox.iter().all(|b| {
            b.r_classes
                .iter()
                .all(|&r| b.l_classes.iter().all(|&l| meets.contains_key(&(r, l))))
        })
    }

    /// Every structural property that must hold in a finite semigroup;
    /// an empty list means all hold.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.order;
        let h_expected = normalize(
            &(0..n)
                .map(|x| self.l_class[x] * n + self.r_class[x])
                .collect::<Vec<_>>(),
        );
        if h_expected != self.h_class {
            out.push("H differs from L ∧ R".to_string());
        }
        for (name, fine, coarse) in [
            ("H ⊆ L", &self.h_class, &self.l_class),
            ("H ⊆ R", &self.h_class, &self.r_class),
            ("L ⊆ D", &self.l_class, &self.d_class),
            ("R ⊆ D", &self.r_class, &self.d_class),
            ("D ⊆ J", &self.d_class, &self.j_class),
        ] {
            if !refines(fine, coarse) {
                out.push(format!("refinement {name} fails"));
            }
        }
        if !refines(&self.j_class, &self.d_class) {
            out.push("J differs from D".to_string());
        }
        if !self.compositions_agree() {
            out.push("R∘L or L∘R differs from D".to_string());
        }
        for b in &self.eggbox {
            let sizes: Vec<usize> = b.cells.iter().flatten().map(|c| c.len()).collect();
            if sizes.contains(&0) {
                out.push(format!(
                    "egg-box of D-class {} has an empty cell",
                    b.d_class
                ));
            }
            if sizes.windows(2).any(|w| w[0] != w[1]) {
                out.push(format!("H-classes of D-class {} differ in size", b.d_class));
            }
        }
        out
    }

    pub fn class_report(&self) -> ClassReport {
        ClassReport {
            l_classes: self.class_members(Relation::L),
            r_classes: self.class_members(Relation::R),
            j_classes: self.class_members(Relation::J),
            h_classes: self.class_members(Relation::H),
            d_classes: self.class_members(Relation::D),
            eggbox: self.eggbox.clone(),
        }
    }
}

/// Machine-readable class listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub l_classes: Vec<Vec<usize>>,
    pub r_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    pub eggbox: Vec<EggBox>,
}

/// The relation `{(x,y) : ∃z, x σ z ∧ z ρ y}` as a boolean matrix.
/// Cubic; intended for small orders.
pub fn compose_relations(sigma: &[usize], rho: &[usize]) -> Vec<Vec<bool>> {
    let n = sigma.len();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| (0..n).any(|z| sigma[x] == sigma[z] && rho[z] == rho[y]))
                .collect()
        })
        .collect()
}

/// Whether an H-class is a group, decided two ways (contains an
/// idempotent; is closed and forms a group) which must agree.
pub fn h_class_is_group(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    h: &SubsetHandle,
) -> Result<bool> {
    let members = h.members();
    let first = *members.first().ok_or(Error::NotAnHClass)?;
    if first >= s.order() || g.h_class_handle(first).members() != members {
        return Err(Error::NotAnHClass);
    }
    let has_idempotent = members.iter().any(|&x| s.is_idempotent(x));
    let closed_group = match s.induced(members) {
        Ok((sub, _)) => sub.is_group(),
        Err(_) => false,
    };
    if has_idempotent != closed_group {
        return Err(Error::InvariantViolation(format!(
            "H-class {members:?}: idempotent test {has_idempotent}, group test {closed_group}"
        )));
    }
    Ok(has_idempotent)
}

fn group_flags(s: &FiniteSemigroup, g: &GreensStructure) -> Vec<bool> {
    let mut flags = vec![false; g.class_count(Relation::H)];
    for e in s.elements().filter(|&e| s.is_idempotent(e)) {
        flags[g.h_class[e]] = true;
    }
    flags
}

/// Covering pairs `(upper, lower)` of the J-order on D-classes.
pub fn d_class_hasse(s: &FiniteSemigroup, g: &GreensStructure) -> Vec<(usize, usize)> {
    let k = g.class_count(Relation::D);
    let mut below = vec![ElementSet::new(k); k];
    for v in s.elements() {
        let dv = g.d_class[v];
        for x in s.elements() {
            below[dv].insert(g.d_class[s.mul(x, v)]);
            below[dv].insert(g.d_class[s.mul(v, x)]);
        }
    }
    // transitive closure
    for _ in 0..k {
        let mut changed = false;
        for a in 0..k {
            let mut acc = below[a].clone();
            for b in below[a].iter() {
                acc.union_with(&below[b]);
            }
            if acc != below[a] {
                below[a] = acc;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in below[a].iter().filter(|&b| b != a) {
            let covered = below[a]
                .iter()
                .any(|c| c != a && c != b && below[c].contains(b));
            if !covered {
                edges.push((a, b));
            }
        }
    }
    edges
}

fn h_label(members: &[usize], group: bool) -> String {
    let body: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    if group {
        format!("{}*", body.join(" "))
    } else {
        body.join(" ")
    }
}

/// Egg-box picture in DOT: a cluster per D-class, a node per H-class
/// (starred when it is a group), edges for the J-order between D-classes.
pub fn eggbox_dot(s: &FiniteSemigroup, g: &GreensStructure) -> String {
    let groups = group_flags(s, g);
    let mut out = String::new();
    out.push_str("digraph eggbox {\n  compound=true;\n  node [shape=box];\n");
    let mut anchor = Vec::new();
    for b in &g.eggbox {
        let _ = writeln!(out, "  subgraph cluster_d{} {{", b.d_class);
        let _ = writeln!(out, "    label=\"D{}\";", b.d_class);
        let mut first = None;
        for row in &b.cells {
            let mut names = Vec::new();
            for cell in row {
                let h = g.h_class[cell[0]];
                let name = format!("h{h}");
                let _ = writeln!(out, "    {name} [label=\"{}\"];", h_label(cell, groups[h]));
                first.get_or_insert(name.clone());
                names.push(name);
            }
            if names.len() > 1 {
                let _ = writeln!(out, "    {{ rank=same; {} }}", names.join("; "));
            }
        }
        out.push_str("  }\n");
        anchor.push(first.expect("D-class is nonempty"));
    }
    for (upper, lower) in d_class_hasse(s, g) {
        let _ = writeln!(
            out,
            "  {} -> {} [ltail=cluster_d{upper}, lhead=cluster_d{lower}];",
            anchor[upper], anchor[lower]
        );
    }
    out.push_str("}\n");
    out
}

/// Egg-box grids as aligned text, one block per D-class.
pub fn eggbox_ascii(s: &FiniteSemigroup, g: &GreensStructure) -> String {
    let groups = group_flags(s, g);
    let mut out = String::new();
    for b in &g.eggbox {
        let labels: Vec<Vec<String>> = b
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| h_label(cell, groups[g.h_class[cell[0]]]))
                    .collect()
            })
            .collect();
        let width = labels.iter().flatten().map(|l| l.len()).max().unwrap_or(1);
        let rule = format!(
            "+{}\n",
            vec!["-".repeat(width + 2); b.l_classes.len()].join("+") + "+"
        );
        let _ = writeln!(out, "D{}:", b.d_class);
        out.push_str(&rule);
        for row in &labels {
            out.push('|');
            for l in row {
                let _ = write!(out, " {l:<width$} |");
            }
            out.push('\n');
            out.push_str(&rule);
        }
    }
    out
}

/// Some `t` with `s*t*s = s`.
pub fn regular_witness(s: &FiniteSemigroup, x: usize) -> Option<usize> {
    s.elements().find(|&t| s.mul(s.mul(x, t), x) == x)
}

pub fn is_regular(s: &FiniteSemigroup, x: usize) -> Result<bool> {
    s.check_element(x)?;
    Ok(regular_witness(s, x).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionViolation {
    pub relation: Relation,
    pub a: usize,
    pub b: usize,
    pub in_subsemigroup: bool,
    pub in_parent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub members: Vec<usize>,
    pub violations: Vec<RestrictionViolation>,
}

impl RestrictionReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `L`, `R`, `H` computed inside a regular subsemigroup `T` with
/// the restrictions of the relations of `S` to `T x T`.
pub fn greens_restriction_check(
    s: &FiniteSemigroup,
    t: &SubsetHandle,
) -> Result<RestrictionReport> {
    if let Some((a, b, product)) = s.closure_violation(t.members()) {
        return Err(Error::NotASubsemigroup { a, b, product });
    }
    let (sub, members) = s.induced(t.members())?;
    if let Some(x) = sub.elements().find(|&x| regular_witness(&sub, x).is_none()) {
        return Err(Error::NotRegularSubsemigroup(members[x]));
    }
    let gs = greens_structure(s);
    let gt = greens_structure(&sub);
    let mut violations = Vec::new();
    for relation in [Relation::L, Relation::R, Relation::H] {
        for a in sub.elements() {
            for b in a + 1..sub.order() {
                let inside = gt.related(relation, a, b);
                let parent = gs.related(relation, members[a], members[b]);
                if inside != parent {
                    violations.push(RestrictionViolation {
                        relation,
                        a: members[a],
                        b: members[b],
                        in_subsemigroup: inside,
                        in_parent: parent,
                    });
                }
            }
        }
    }
    Ok(RestrictionReport {
        members,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stability {
    pub right: bool,
    pub left: bool,
    /// First `(s, x)` breaking either implication.
    pub witness: Option<(usize, usize)>,
}

/// Right stability `s J sx ⇒ s R sx` and left stability
/// `s J xs ⇒ s L xs` over all pairs.
pub fn is_stable(s: &FiniteSemigroup, g: &GreensStructure) -> Stability {
    let mut right = true;
    let mut left = true;
    let mut witness = None;
    for a in s.elements() {
        for x in s.elements() {
            let ax = s.mul(a, x);
            if g.related(Relation::J, a, ax) && !g.related(Relation::R, a, ax) {
                right = false;
                witness.get_or_insert((a, x));
            }
            let xa = s.mul(x, a);
            if g.related(Relation::J, a, xa) && !g.related(Relation::L, a, xa) {
                left = false;
                witness.get_or_insert((a, x));
            }
        }
    }
    Stability {
        right,
        left,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn sets(v: &[Vec<usize>]) -> Vec<Vec<usize>> {
        v.to_vec()
    }

    #[test]
    fn principal_ideal_examples() {
        let p = principal_ideals(&l2(), 0).unwrap();
        assert_eq!(p.left.members(), &[0, 1]);
        assert_eq!(p.right.members(), &[0]);
        assert_eq!(p.two_sided.members(), &[0, 1]);
        let p = principal_ideals(&z3(), 1).unwrap();
        assert_eq!(p.left.members(), &[0, 1, 2]);
        assert_eq!(p.two_sided.members(), &[0, 1, 2]);
        let p = principal_ideals(&t2(), 2).unwrap();
        assert_eq!(p.left.members(), &[2, 3]);
        assert_eq!(p.right.members(), &[2]);
        assert_eq!(p.two_sided.members(), &[2, 3]);
        assert!(principal_ideals(&t2(), 4).is_err());
    }

    #[test]
    fn group_is_one_class() {
        let g = greens_structure(&z3());
        for r in [
            Relation::L,
            Relation::R,
            Relation::J,
            Relation::H,
            Relation::D,
        ] {
            assert_eq!(g.class_count(r), 1);
        }
    }

    #[test]
    fn rectangular_band_classes() {
        let g = greens_structure(&rb22());
        assert_eq!(
            g.class_members(Relation::R),
            sets(&[vec![0, 1], vec![2, 3]])
        );
        assert_eq!(
            g.class_members(Relation::L),
            sets(&[vec![0, 2], vec![1, 3]])
        );
        assert_eq!(g.class_count(Relation::H), 4);
        assert_eq!(g.class_members(Relation::D), sets(&[vec![0, 1, 2, 3]]));
        assert_eq!(g.class_members(Relation::J), sets(&[vec![0, 1, 2, 3]]));
        assert_eq!(
            g.eggbox()[0].cells,
            vec![vec![vec![0], vec![1]], vec![vec![2], vec![3]]]
        );
    }

    #[test]
    fn t2_classes() {
        let g = greens_structure(&t2());
        assert_eq!(
            g.class_members(Relation::D),
            sets(&[vec![0, 1], vec![2, 3]])
        );
        assert_eq!(
            g.class_members(Relation::R),
            sets(&[vec![0, 1], vec![2], vec![3]])
        );
        assert_eq!(
            g.class_members(Relation::L),
            sets(&[vec![0, 1], vec![2, 3]])
        );
        assert!(g.invariant_violations().is_empty());
    }

    #[test]
    fn methods_agree_on_fixtures() {
        for s in [z3(), l2(), t2(), paper_band(), rb22(), sym3(), klein()] {
            for r in [Relation::L, Relation::R, Relation::J] {
                assert_eq!(
                    one_sided_partition(&s, r, Method::PrincipalIdeals),
                    one_sided_partition(&s, r, Method::Reachability),
                    "{:?} {r:?}",
                    s.name()
                );
            }
        }
    }

    #[test]
    fn compositions_match_d() {
        for s in [t2(), paper_band(), rb22()] {
            let g = greens_structure(&s);
            let rl = compose_relations(g.classes(Relation::R), g.classes(Relation::L));
            let lr = compose_relations(g.classes(Relation::L), g.classes(Relation::R));
            assert_eq!(rl, lr);
            for a in s.elements() {
                for b in s.elements() {
                    assert_eq!(rl[a][b], g.related(Relation::D, a, b));
                }
            }
        }
    }

    #[test]
    fn dot_output() {
        let dot = eggbox_dot(&trivial(), &greens_structure(&trivial()));
        assert_eq!(dot.matches("[label=\"").count(), 1);
        let dot = eggbox_dot(&t2(), &greens_structure(&t2()));
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("[label=\"2*\"]"));
        assert!(dot.contains("[label=\"3*\"]"));
        assert!(dot.contains("[label=\"0 1*\"]"));
        assert!(dot.contains("h0 -> h1 [ltail=cluster_d0, lhead=cluster_d1];"));
        let dot = eggbox_dot(&rb22(), &greens_structure(&rb22()));
        assert_eq!(dot.matches("subgraph cluster_").count(), 1);
        assert_eq!(dot.matches("*\"]").count(), 4);
        assert_eq!(dot.matches("rank=same").count(), 2);
    }

    #[test]
    fn ascii_grid() {
        let text = eggbox_ascii(&rb22(), &greens_structure(&rb22()));
        assert_eq!(
            text,
            "D0:\n+----+----+\n| 0* | 1* |\n+----+----+\n| 2* | 3* |\n+----+----+\n"
        );
    }

    #[test]
    fn h_class_groups() {
        let s = z3();
        let g = greens_structure(&s);
        assert!(h_class_is_group(&s, &g, &g.h_class_handle(0)).unwrap());
        let s = t2();
        let g = greens_structure(&s);
        assert!(h_class_is_group(&s, &g, &g.h_class_handle(2)).unwrap());
        let bogus = SubsetHandle::new(&s, [1, 2], Role::Generic).unwrap();
        assert_eq!(h_class_is_group(&s, &g, &bogus), Err(Error::NotAnHClass));
        let s = paper_band();
        let g = greens_structure(&s);
        for x in s.elements() {
            assert!(h_class_is_group(&s, &g, &g.h_class_handle(x)).unwrap());
        }
    }

    #[test]
    fn non_group_h_class() {
        // null semigroup on 2 elements: 1*1 = 0 etc; {1} is an H-class
        // without idempotent.
        let s = FiniteSemigroup::from_fn(2, |_, _| 0).unwrap();
        let g = greens_structure(&s);
        assert!(!h_class_is_group(&s, &g, &g.h_class_handle(1)).unwrap());
        assert!(!is_regular(&s, 1).unwrap());
        assert!(is_regular(&s, 0).unwrap());
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&z3(), 1).unwrap());
        for e in t2().idempotents().members() {
            assert!(is_regular(&t2(), *e).unwrap());
        }
    }

    #[test]
    fn restriction_examples() {
        let s = t2();
        let unit = SubsetHandle::new(&s, [0, 1], Role::Subsemigroup).unwrap();
        let rep = greens_restriction_check(&s, &unit).unwrap();
        assert!(rep.holds());
        let whole = SubsetHandle::new(&s, 0..4, Role::Subsemigroup).unwrap();
        assert!(greens_restriction_check(&s, &whole).unwrap().holds());
        let null = FiniteSemigroup::from_fn(2, |_, _| 0).unwrap();
        let all = SubsetHandle::new(&null, [0, 1], Role::Subsemigroup).unwrap();
        assert_eq!(
            greens_restriction_check(&null, &all),
            Err(Error::NotRegularSubsemigroup(1))
        );
    }

    #[test]
    fn stability_on_fixtures() {
        for s in [z3(), paper_band(), t2(), rb22()] {
            let st = is_stable(&s, &greens_structure(&s));
            assert_eq!((st.right, st.left, st.witness), (true, true, None));
        }
    }

    #[test]
    fn commutative_collapses_relations() {
        let s = FiniteSemigroup::from_fn(4, |a, b| a.max(b)).unwrap();
        let g = greens_structure(&s);
        let l = g.classes(Relation::L).to_vec();
        for r in [Relation::R, Relation::J, Relation::H, Relation::D] {
            assert_eq!(g.classes(r), &l[..]);
        }
    }
}
