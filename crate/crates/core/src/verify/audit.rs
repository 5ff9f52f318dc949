//! Per-class audits and the closed-form catalog checks.

use std::cmp::Ordering;

use super::{collect_cells, strictly_below, Check, Entry, PendantClass, VerifyError, THEOREM_MIN_N};
use crate::exec::Exec;
use crate::families::{build_family, BaseClass, FamilySpec};
use crate::graph::{canonical_form, to_graph6, Graph};
use crate::invariants::v_prime_set;
use crate::spectral::{char_poly, compare_radii, family_poly, identity_catalog, spectral_radius, IdentityId};

fn family(spec: FamilySpec) -> Option<Graph> {
    build_family(&spec).ok()
}

/// Ordering check `rho(lower) < rho(upper)` between two named families;
/// skipped (None) when either is infeasible. Asserted from
/// [`THEOREM_MIN_N`] on, reported below it.
fn ordering(lower: FamilySpec, upper: FamilySpec) -> Option<Check> {
    let (a, b) = (family(lower)?, family(upper)?);
    let ord = compare_radii(&a, &b);
    Some(Check::new(
        format!("rho({lower}) < rho({upper})"),
        ord == Ordering::Less,
        upper.n() >= THEOREM_MIN_N,
        format!("certified {ord:?}"),
    ))
}

fn bsharp_chain(n: usize, k_max: usize, asserted: bool) -> Check {
    let mut failures = Vec::new();
    for k in 1..=k_max {
        let a = family(FamilySpec::Bsharp { n, k });
        let b = family(FamilySpec::Bsharp { n, k: k + 1 });
        if let (Some(a), Some(b)) = (a, b) {
            if compare_radii(&a, &b) != Ordering::Less {
                failures.push(k);
            }
        }
    }
    Check::new(
        format!("n={n} rho(Bsharp(k)) increasing for k = 1..={k_max}"),
        failures.is_empty(),
        asserted,
        if failures.is_empty() {
            format!("{k_max} strict steps certified")
        } else {
            format!("fails at k = {failures:?}")
        },
    )
}

/// `V'` structure on a `k = alpha - 1` graph: one to three vertices, two of
/// them adjacent, three of them a triangle.
fn v_prime_ok(g: &Graph) -> bool {
    let v = v_prime_set(g);
    match v.len() {
        1 => true,
        2 => g.has_edge(v[0], v[1]),
        3 => g.has_edge(v[0], v[1]) && g.has_edge(v[1], v[2]) && g.has_edge(v[0], v[2]),
        _ => false,
    }
}

/// Lemma audits for one `(n, alpha)` cell given its enumerated members.
pub(crate) fn audit_cell(n: usize, alpha: usize, entries: &[Entry]) -> Vec<Check> {
    let mut checks = Vec::new();
    let tag = format!("n={n} alpha={alpha}");
    let in_range = n >= THEOREM_MIN_N && 2 * alpha + 1 >= n && alpha + 3 <= n;

    let unclassified: Vec<&Entry> = entries.iter().filter(|e| e.class().is_none()).collect();
    checks.push(Check::new(
        format!("{tag} C1+C2+C3 = class size"),
        unclassified.is_empty(),
        true,
        format!("{} graphs, {} with more than alpha pendants", entries.len(), unclassified.len()),
    ));

    let m_spec = FamilySpec::M { n, alpha };
    if let Some(m) = family(m_spec) {
        let cert = spectral_radius(&m).expect("connected");
        let m_label = canonical_form(&m);
        for (class, name) in [
            (PendantClass::C1, "C1"),
            (PendantClass::C2, "C2"),
            (PendantClass::C3, "C3"),
        ] {
            let members: Vec<&Entry> = entries
                .iter()
                .filter(|e| e.class() == Some(class) && e.label != m_label)
                .collect();
            let offenders: Vec<String> = members
                .iter()
                .filter(|e| !strictly_below(&e.graph, &m, &cert))
                .map(|e| to_graph6(&e.graph))
                .collect();
            checks.push(Check::new(
                format!("{tag} max over {name} below rho({m_spec})"),
                offenders.is_empty(),
                in_range,
                format!("{} graphs checked; offenders: {offenders:?}", members.len()),
            ));
        }
    }

    // Within C3 the B1 maximum is M1' and the B2 maximum is M1.
    for (class, spec) in [
        (BaseClass::B1, FamilySpec::M1prime { n, alpha }),
        (BaseClass::B2, FamilySpec::M1 { n, alpha }),
    ] {
        let Some(g) = family(spec) else { continue };
        let members: Vec<&Entry> = entries
            .iter()
            .filter(|e| e.class() == Some(PendantClass::C3) && super::class_of(e) == class)
            .collect();
        let label = canonical_form(&g);
        let cert = spectral_radius(&g).expect("connected");
        let contained = members.iter().any(|e| e.label == label);
        let offenders: Vec<String> = members
            .iter()
            .filter(|e| e.label != label && !strictly_below(&e.graph, &g, &cert))
            .map(|e| to_graph6(&e.graph))
            .collect();
        // With no pendant on the hub the family leaves B(n, alpha, alpha).
        let hub_pendants = 2 * alpha + 1 - n;
        checks.push(Check::new(
            format!("{tag} C3 {class} maximizer is {spec}"),
            contained && offenders.is_empty(),
            in_range && hub_pendants > 0,
            format!("member = {contained}, {} graphs; offenders: {offenders:?}", members.len()),
        ));
    }

    let c2: Vec<&Entry> = entries.iter().filter(|e| e.class() == Some(PendantClass::C2)).collect();
    let bad: Vec<String> = c2.iter().filter(|e| !v_prime_ok(&e.graph)).map(|e| to_graph6(&e.graph)).collect();
    checks.push(Check::new(
        format!("{tag} C2 V' structure"),
        bad.is_empty(),
        false,
        format!("{} graphs, {} without the expected V' shape {:?}", c2.len(), bad.len(), &bad[..bad.len().min(5)]),
    ));

    if alpha >= 3 {
        let k_max = (alpha - 2).min(n.saturating_sub(6));
        checks.push(bsharp_chain(n, k_max, in_range));
    }

    if let Some(mut c) = ordering(FamilySpec::M3prime { n, alpha }, FamilySpec::M3 { n, alpha }) {
        c.name = format!("{tag} {}", c.name);
        c.asserted = false;
        checks.push(c);
    }
    checks
}

/// Class-lemma audits for `B(n, alpha)`.
pub fn audit_class_lemmas(n: usize, alpha: usize, exec: Exec) -> Result<Vec<Check>, VerifyError> {
    let cells = collect_cells(n, exec)?;
    let entries = cells.get(&alpha).ok_or(VerifyError::EmptyClass { n, alpha })?;
    Ok(audit_cell(n, alpha, entries))
}

/// Polynomial identities, closed-form characteristic polynomials and the
/// ordering lemmas between named families, for every `n` in range.
pub fn run_identity_catalog(n_min: usize, n_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let outcomes = identity_catalog(n_min, n_max);
    for id in IdentityId::ALL {
        let rows: Vec<_> = outcomes.iter().filter(|o| o.id == id).collect();
        let failing: Vec<(usize, usize)> = rows.iter().filter(|o| !o.holds).map(|o| (o.n, o.alpha)).collect();
        checks.push(Check::new(
            format!("identity {id} on n={n_min}..={n_max}"),
            failing.is_empty(),
            true,
            format!("{} of {} parameter points hold; failing {failing:?}", rows.len() - failing.len(), rows.len()),
        ));
        let printed = rows.iter().filter(|o| o.holds_as_printed).count();
        checks.push(Check::new(
            format!("identity {id} as printed on n={n_min}..={n_max}"),
            printed == rows.len(),
            false,
            format!("{printed} of {} parameter points hold", rows.len()),
        ));
    }

    for n in n_min..=n_max {
        let mut total = 0;
        let mut bad = Vec::new();
        for spec in FamilySpec::feasible_on(n) {
            if let Ok(p) = family_poly(&spec) {
                total += 1;
                if p != char_poly(&build_family(&spec).unwrap()) {
                    bad.push(spec.to_string());
                }
            }
        }
        checks.push(Check::new(
            format!("n={n} closed-form characteristic polynomials"),
            bad.is_empty(),
            true,
            format!("{total} specs; mismatches {bad:?}"),
        ));

        if n % 2 == 0 {
            checks.extend(ordering(FamilySpec::Fprime { n }, FamilySpec::F { n }));
        }
        for alpha in 0..=n {
            let m = FamilySpec::M { n, alpha };
            for lower in [
                FamilySpec::M1 { n, alpha },
                FamilySpec::M2 { n, alpha },
                FamilySpec::M3 { n, alpha },
                FamilySpec::M4 { n, alpha },
                FamilySpec::M5 { n, alpha },
                FamilySpec::M6 { n, alpha },
            ] {
                checks.extend(ordering(lower, m));
            }
            checks.extend(ordering(FamilySpec::M1prime { n, alpha }, FamilySpec::M1 { n, alpha }));
        }
        if n >= 7 {
            checks.push(bsharp_chain(n, n - 6, n >= THEOREM_MIN_N));
        }
    }
    checks
}
