//! One section per subcommand: human summary lines plus check results.

use modnine_core::cover::{
    build_model_z, cuspform_basis, eq1_residual, eq2_identity, f_polynomial_degree, f_ramification, fit_cover,
    fit_cover_numerator, fit_model, fit_x_z1_relation, j0_expected, master_identity, match_printed_phi,
    normalized_phis, three_486, verify_covers_of_z1_line, verify_f_identities, adjoint_space, adopted_denominator,
    f_numerator_printed,
};
use modnine_core::curves::{
    classify_gl2_f3, frobenius_mod9_check, mod3_image_class, torsion_points, Mod3Image, Point, WeierstrassCurve,
};
use modnine_core::diophantine::{
    check_table, cube_identity_holds, cube_obstruction, integral_values, mod9_denominator_lemma, reduced_fractions,
    thue_search, x9prime_point_search, ZPoint,
};
use modnine_core::exact::rat::{is_rational_cube, rat};
use modnine_core::exact::{parse_k, qpoly, CycNum, Rat};
use modnine_core::modgroup::{
    borel_membership, closure, cusp_orbits, extend_to_gprime, fixed_points_in_fibers, g_generators,
    genus_of_quotient, group_g, lift_search, lift_search_for, printed_generators, reduction_bijective, sigma_data,
    standard_s, standard_t, units_mod9, MatMod, ProjGroup,
};
use modnine_core::qseries::{expand_j, verify_j_of_h};
use modnine_core::reference::{self, THUE_ONE, THUE_THREE_X};
use modnine_core::units::{
    alpha, alpha_printed, alpha_printed_bernoulli, coordinate_x, coordinate_x_printed, coordinate_y, cusp_values,
    f_series, fmt_mobius, g_orbit_unit, match_mobius, mobius_equal_up_to_scalar, orbit_products, printed_series,
    printed_sibling_maps, quadratic_relations, x_map, printed_x_map,
};
use modnine_core::{cover, Error};

use crate::report::{CheckResult, Flags};

pub struct Section {
    pub name: &'static str,
    pub lines: Vec<String>,
    pub results: Vec<CheckResult>,
}

impl Section {
    fn new(name: &'static str) -> Self {
        Section { name, lines: Vec::new(), results: Vec::new() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn check(&mut self, id: &str, pass: bool, expected: impl ToString, actual: impl ToString, citation: &str) {
        let r = CheckResult::new(&format!("{}.{id}", self.name), pass, expected.to_string(), actual.to_string(), citation);
        self.results.push(r);
    }

    fn erratum(&mut self, id: &str, resolved: bool, printed: impl ToString, resolution: impl ToString, citation: &str) {
        let r = CheckResult::erratum(
            &format!("{}.{id}", self.name),
            resolved,
            printed.to_string(),
            resolution.to_string(),
            citation,
        );
        self.results.push(r);
    }
}

type Body = fn(&Flags, &mut Section) -> Result<(), Error>;

fn run(name: &'static str, flags: &Flags, body: Body) -> Section {
    let mut s = Section::new(name);
    if let Err(e) = body(flags, &mut s) {
        let r = CheckResult::from_error(&format!("{name}.pipeline"), "pipeline completes", e, "pipeline");
        s.results.push(r);
    }
    s
}

pub const SUBCOMMANDS: [&str; 7] = ["group", "units", "cover", "fcover", "xprime", "curves", "integral"];

pub fn section(name: &str, flags: &Flags) -> Option<Section> {
    let body: (&'static str, Body) = match name {
        "group" => ("group", group),
        "units" => ("units", units),
        "cover" => ("cover", cover_section),
        "fcover" => ("fcover", fcover),
        "xprime" => ("xprime", xprime),
        "curves" => ("curves", curves),
        "integral" => ("integral", integral),
        _ => return None,
    };
    Some(run(body.0, flags, body.1))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn group(_: &Flags, s: &mut Section) -> Result<(), Error> {
    let ls = lift_search();
    s.line(format!("{} lifts of (S, T) to SL2(Z/9) with S^2 = (ST)^3 = -I, T^3 = I", ls.pairs.len()));
    s.check("lift_count", ls.pairs.len() == 27, 27, ls.pairs.len(), "lift search: number of pairs");
    s.check(
        "lift_classes",
        ls.classes == 1 && ls.admissible.len() == ls.pairs.len(),
        "1 class, every pair admissible",
        format!("{} class(es), {} admissible", ls.classes, ls.admissible.len()),
        "lift search: all pairs simultaneously conjugate",
    );
    let (ps, pt) = printed_generators();
    let (gs, gt) = g_generators();
    let printed_in = ls.pairs.contains(&(ps, pt));
    let minus = MatMod::scalar(9, -1);
    s.erratum(
        "printed_pair",
        !printed_in && ls.pairs.contains(&(gs, gt)),
        format!("({ps}, {pt}) is one of the lifts"),
        format!(
            "printed pair has (ST)^3 = -I: {}; with T = {gt} (upper-right entry 4) the pair is a lift",
            yes(ps.mul(&pt).pow(3) == minus)
        ),
        "generators of G",
    );
    let literal_s = MatMod::new(3, 0, 1, -1, 0);
    let literal = lift_search_for(&literal_s, &standard_t(3)).len();
    s.erratum(
        "s_sign",
        literal == 0 && !ls.pairs.is_empty(),
        format!("S = {literal_s} mod 3"),
        format!("{literal} lifts with that S; {} with S = {}", ls.pairs.len(), standard_s(3)),
        "standard generators mod 3",
    );
    let g = group_g();
    s.line(format!("|G| = {}", g.order()));
    s.check("order_g", g.order() == 24, 24, g.order(), "order of G");
    s.check("reduction_bijective", reduction_bijective(&g), "yes", yes(reduction_bijective(&g)), "G maps onto SL2(Z/3)");
    let gp = extend_to_gprime(&g)?;
    s.check(
        "gprime",
        gp.group.order() == 144 && gp.normalizing_lifts.len() == 6,
        "|G'| = 144, normalizing lift unique up to scalars",
        format!("|G'| = {}, {} scalar multiples of diag(-1,1)", gp.group.order(), gp.normalizing_lifts.len()),
        "determinant extension G'",
    );
    let mut borel = Vec::new();
    for a in units_mod9() {
        if borel_membership(&gp.group, a)? {
            borel.push(a);
        }
    }
    s.check("borel", borel == [1, 8], "a in {1, 8}", format!("{borel:?}"), "Borel test for the cusp field");
    let orbits = cusp_orbits(&g);
    s.line(format!("{} cusp orbits of sizes {:?}", orbits.len(), orbits.iter().map(|o| o.0.len()).collect::<Vec<_>>()));
    s.check(
        "cusp_orbits",
        orbits.len() == 3 && orbits.iter().all(|(o, st)| o.len() == 12 && *st == 1),
        "3 orbits of 12, trivial stabilizers",
        format!("{:?}", orbits.iter().map(|(o, st)| (o.len(), *st)).collect::<Vec<_>>()),
        "cusp orbits",
    );
    let (deg, types, genus) = genus_of_quotient(&g.projective())?;
    let tstr: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    s.check(
        "cycle_types",
        deg == 27 && tstr == ["9^3", "3^8 1^3", "2^12 1^3"],
        "9^3 / 3^8 1^3 / 2^12 1^3",
        tstr.join(" / "),
        "ramification of the degree-27 cover",
    );
    s.erratum(
        "shorthand_12_2",
        tstr[2] == "2^12 1^3",
        "12^2 1^3",
        format!("cycle type over 1728 is {}", tstr[2]),
        "cycle type over j = 1728",
    );
    let (d9, _, g9) = genus_of_quotient(&ProjGroup::trivial(9))?;
    let tq = closure(9, &[gt])?.projective();
    let (dt, _, gtq) = genus_of_quotient(&tq)?;
    s.line("genus table:".to_string());
    s.line(format!("  X(9)            degree {d9:>3}  genus {g9}"));
    s.line(format!("  X(9)/G          degree {deg:>3}  genus {genus}"));
    s.line(format!("  X(9)/<T'>       degree {dt:>3}  genus {gtq}"));
    s.check("genus_x9", (d9, g9) == (324, 10), "(324, 10)", format!("({d9}, {g9})"), "genus of X(9)");
    s.check("genus_g", genus == 0, 0, genus, "genus of X(9)/G");
    s.check("genus_t", (dt, gtq) == (108, 3), "(108, 3)", format!("({dt}, {gtq})"), "genus of X(9)/<T'>");
    let ram: usize = types.iter().map(|t| t.ramification()).sum();
    let mut fixed = 0;
    for m in &g.projective().elements {
        if m.proj_order() > 1 {
            fixed += fixed_points_in_fibers(m)?;
        }
    }
    s.check(
        "ramification_sums",
        ram == 52 && fixed == 42,
        "52 over the j-line, 42 fixed points",
        format!("{ram}, {fixed}"),
        "Riemann-Hurwitz arithmetic",
    );
    Ok(())
}

fn units(f: &Flags, s: &mut Section) -> Result<(), Error> {
    let n = f.order;
    let fser = f_series(n)?;
    let printed_f = printed_series(&reference::F_TERMS, 4);
    let f_ok = cover::first_difference(&fser.truncate(&Rat::from_integer(5.into())), &printed_f)?.is_none();
    s.line(format!("F = {}", fser.truncate_terms(6)));
    s.check("f_expansion", f_ok, "printed F through q9^4", yes(f_ok), "expansion of F");
    let alpha_ok = (1..9).all(|a| alpha(a) == rat(a * a, 18) - rat(a, 2) + rat(3, 4));
    let literal_consistent = (1..9).all(|a| alpha_printed(a) == alpha_printed_bernoulli(a));
    s.erratum(
        "alpha_formula",
        alpha_ok && f_ok && !literal_consistent,
        "(a^2/9 + a - 9/6)/2 = 18 B2(a/9)",
        format!(
            "the two printed forms disagree (a=1: {} vs {}); alpha = a^2/18 - a/2 + 3/4 reproduces F",
            alpha_printed(1),
            alpha_printed_bernoulli(1)
        ),
        "Siegel function exponent",
    );
    let u = g_orbit_unit(modnine_core::modgroup::CuspClass(1, 0));
    s.check("quadratic_relations", quadratic_relations(&u), "yes", yes(quadratic_relations(&u)), "quadratic relations");
    let [fo, t2, t3] = orbit_products(n.min(40))?;
    let m2 = match_mobius(&fo, &t2)?;
    let m3 = match_mobius(&fo, &t3)?;
    let [p2, p3] = printed_sibling_maps();
    s.check(
        "sibling_1",
        mobius_equal_up_to_scalar(&m2, &p2),
        fmt_mobius(&p2, "F"),
        fmt_mobius(&m2, "F"),
        "first sibling orbit product",
    );
    let one_m_c2 = &CycNum::from_int(1) - &CycNum::c(2);
    let derived3 = [CycNum::from_int(1), one_m_c2, CycNum::from_int(1), CycNum::from_int(0)];
    s.erratum(
        "sibling_2",
        !mobius_equal_up_to_scalar(&m3, &p3) && mobius_equal_up_to_scalar(&m3, &derived3),
        fmt_mobius(&p3, "F"),
        format!("match_mobius gives {}", fmt_mobius(&m3, "F")),
        "second sibling orbit product",
    );
    let x = coordinate_x(&fser)?;
    let printed_x = printed_series(&reference::X_TERMS, 4);
    let x_ok = cover::first_difference(&x.truncate(&Rat::from_integer(5.into())), &printed_x)?.is_none();
    s.line(format!("x = {}", x.truncate_terms(5)));
    s.check("x_expansion", x_ok, "printed x through q9^4", yes(x_ok), "expansion of x");
    let cub = reference::denominator_cubic();
    let vals = cusp_values(&x)?;
    let roots = vals.iter().all(|v| {
        cub.coeffs().iter().rev().fold(CycNum::from_int(0), |acc, c| &(&acc * v) + &CycNum::from_rational(c)).is_zero()
    });
    s.check("x_cusp_values", roots, "roots of x^3 - 3x - 1", yes(roots), "cusp values of x");
    let y = coordinate_y(n.min(40))?;
    let printed_y = printed_series(&reference::Y_TERMS, 3);
    let y_ok = cover::first_difference(&y.y.truncate(&Rat::from_integer(4.into())), &printed_y)?.is_none();
    s.check(
        "y_coordinate",
        y.rank == 2 && y_ok && y.y.is_real(),
        "rank 2, printed y through q9^3, real",
        format!("rank {}, match {}, real {}", y.rank, yes(y_ok), yes(y.y.is_real())),
        "triple products and y",
    );
    Ok(())
}

fn cover_section(f: &Flags, s: &mut Section) -> Result<(), Error> {
    let r = verify_f_identities()?;
    s.check("forms_agree", r.forms_agree, "yes", yes(r.forms_agree), "two forms of f");
    s.erratum(
        "f_sign",
        r.forms_agree && !r.literal_forms_agree,
        "f = -3^7 (...)^3 (...)/(x^3 - 3x - 1)^9",
        "the printed forms disagree by a sign; with denominator (1 + 3x - x^3)^9 they agree and j = f(x) holds",
        "sign of f",
    );
    s.check(
        "a0_b0",
        r.a0 == Rat::from_integer((-23).into()) && r.b0 == Rat::from_integer(28.into()),
        "A(0) = -23, B(0) = 28",
        format!("A(0) = {}, B(0) = {}", r.a0, r.b0),
        "the 1728-form",
    );
    s.check("vanishes_at_pm1", r.vanishes_at_pm1, "f(1) = f(-1) = 0", yes(r.vanishes_at_pm1), "zeros of f");
    s.check("resultant", r.resultant == three_486(), "3^486", if r.resultant == three_486() { "3^486".into() } else { r.resultant.to_string() }, "resultant");
    let ram: Vec<String> = f_ramification().iter().map(|t| t.to_string()).collect();
    s.check(
        "ramification_from_f",
        ram == ["9^3", "3^8 1^3", "2^12 1^3"],
        "9^3 / 3^8 1^3 / 2^12 1^3",
        ram.join(" / "),
        "ramification read from f",
    );
    let jh = verify_j_of_h(f.order.max(60));
    s.erratum(
        "j_of_h_cube",
        jh.cubed_holds && !jh.uncubed_holds,
        "j (H^3 - 27)^3 = H^3 (H^3 + 216)",
        format!("holds with (H^3 + 216)^3 on {} terms; the uncubed form has leading exponents {} vs {}", jh.terms, jh.uncubed_leads.0, jh.uncubed_leads.1),
        "j in terms of H",
    );
    let rf = cover::cover_f();
    s.line(format!("f = N(x) / (1 + 3x - x^3)^9 with deg N = {}, deg of denominator {}", rf.num().degree().unwrap_or(0), rf.den().degree().unwrap_or(0)));
    Ok(())
}

fn fcover(f: &Flags, s: &mut Section) -> Result<(), Error> {
    let n = f.order;
    let big = n.max(200);
    let x = coordinate_x(&f_series(big)?)?;
    let j = expand_j(big);
    let d = adopted_denominator();
    let num = fit_cover_numerator(&x, &j, &d, 27)?;
    s.check(
        "fit_numerator",
        num == f_numerator_printed(),
        "printed factored numerator over (1 + 3x - x^3)^9",
        yes(num == f_numerator_printed()),
        "degree-27 cover",
    );
    let low = fit_cover(&x, &j, &d, 26);
    s.check("fit_degree_26", low.is_err(), "no fit", if low.is_err() { "no fit" } else { "fit found" }, "degree of f");
    let m = master_identity(40.max(n.min(80)))?;
    s.check(
        "master_identity",
        m.derived.is_none(),
        format!("j = f(x) on {} terms", m.terms),
        match &m.derived {
            None => "holds".to_string(),
            Some(e) => format!("first difference at q9^{e}"),
        },
        "j = f(x)",
    );
    s.erratum(
        "x_formula",
        m.derived.is_none() && m.printed_x.is_some() && !mobius_equal_up_to_scalar(&x_map(), &printed_x_map()),
        fmt_mobius(&printed_x_map(), "F"),
        format!(
            "printed formula breaks j = f(x) at q9^{}; x = {} matches the printed x expansion",
            m.printed_x.map(|e| e.to_string()).unwrap_or_default(),
            fmt_mobius(&x_map(), "F")
        ),
        "x as a function of F",
    );
    let xp = coordinate_x_printed(&f_series(n)?)?;
    s.line(format!("x from the printed formula: {}", xp.truncate_terms(4)));
    let deg = f_polynomial_degree(40)?;
    s.check("f_polynomial_degree", deg == 27, 27, deg, "j times the cusp units is a polynomial in F");
    let yb = coordinate_y(big)?.y;
    let model = fit_model(&x, &yb)?;
    let ph = normalized_phis(&cuspform_basis(&model.p, &x, &yb)?)?;
    let z1 = build_model_z(&ph[0].series, &ph[1].series, &ph[2].series)?.0;
    let c = verify_covers_of_z1_line(&z1, &expand_j(big))?;
    s.check(
        "z1_line_degree",
        c.j_hat.degree() == 36,
        36,
        c.j_hat.degree(),
        "z1 covers the j-line with degree 36",
    );
    s.check(
        "z1_line_level3",
        c.j0_hat.degree() == 4 && c.j0_hat == j0_expected() && c.factors_through_h,
        "degree-4 map through h(z1) = 27(u/v)^3",
        format!("degree {}, factors {}", c.j0_hat.degree(), yes(c.factors_through_h)),
        "z1 covers X0(3) with degree 9",
    );
    Ok(())
}

fn xprime(f: &Flags, s: &mut Section) -> Result<(), Error> {
    let n = f.order.max(60);
    let x = coordinate_x(&f_series(n)?)?;
    let y = coordinate_y(n)?.y;
    let m = fit_model(&x, &y)?;
    s.line(format!("P(x, y) = {}", m.p.fmt_with(&["x", "y"])));
    s.check(
        "model",
        m.solution_dim == 1 && m.irreducible && m.p.degree_in(0) == Some(3) && m.p.degree_in(1) == Some(4),
        "bidegree (3,4), unique, irreducible",
        format!("dim {}, irreducible {}", m.solution_dim, yes(m.irreducible)),
        "plane model P(x, y)",
    );
    s.check("double_points", m.double_points, "x = y = -c1, -c2, -c4", yes(m.double_points), "singularities of P");
    let adj = adjoint_space()?.len();
    s.check("cuspform_dim", adj == 3, 3, adj, "cuspform space");
    let basis = cuspform_basis(&m.p, &x, &y)?;
    let phis = normalized_phis(&basis)?;
    s.check("phi1", phis[0].mismatches.is_empty(), "printed phi1", format!("{:?}", phis[0].mismatches), "phi1");
    s.check("phi3", phis[2].mismatches.is_empty(), "printed phi3", format!("{:?}", phis[2].mismatches), "phi3");
    let c8 = phis[1].series.coeff_at_int(8).map(|c| c.to_k().map(|k| k.to_string()).unwrap_or_default()).unwrap_or_default();
    s.erratum(
        "phi2_q8",
        phis[1].mismatches == [8] && phis[1].series.coeff_at_int(8) == parse_k("c4-c2"),
        "coefficient c2 + c4 at the eighth power",
        format!("fitted phi2 agrees elsewhere; its coefficient there is c4 - c2 ({c8})"),
        "phi2",
    );
    let q_reading = match_printed_phi(&basis, &reference::PHI2_TERMS, 9, 5);
    s.erratum(
        "phi_variable",
        q_reading.is_err() && phis.iter().all(|p| p.mismatches.len() <= 1),
        "expansions in q",
        "no combination of the cuspforms fits when the variable is q = q9^9; the expansions are in q9",
        "variable of phi expansions",
    );
    let (z1, z2) = build_model_z(&phis[0].series, &phis[1].series, &phis[2].series)?;
    let eq1 = eq1_residual(&z1, &z2)?;
    s.check("eq1", eq1.is_none(), "holds on series", eq1.map(|e| format!("fails at q9^{e}")).unwrap_or("holds".into()), "z-model equation");
    let eq2 = eq2_identity()?;
    s.check("eq2", eq2, "reduces to 0", yes(eq2), "map to Y^2 + Y = X^3");
    let sd = sigma_data()?;
    s.check(
        "sigma",
        sd.equals_3t_minus_2 && sd.commutes_with_t && sd.outside_t && sd.proj_order == 3 && sd.quotient_genus == 0
            && sd.quotient_degree == 36 && sd.in_level3_borel,
        "order 3, commutes with T', quotient of genus 0 and degree 36 inside the level-3 Borel",
        format!("order {}, quotient degree {} genus {}", sd.proj_order, sd.quotient_degree, sd.quotient_genus),
        "the automorphism sigma",
    );
    let r = fit_x_z1_relation(&x, &z1)?;
    let over0 = r.over_zero.monic() == qpoly(&[1, 1]).pow(3);
    let overinf = r.over_infinity.monic() == qpoly(&[-1, 1]).pow(3);
    s.check(
        "x_at_rational_points",
        r.solution_dim == 1 && over0 && overinf,
        "z1 = 0 lies over x = -1, z1 = infinity over x = 1",
        format!("R(x,0) ~ (x+1)^3: {}, leading ~ (x-1)^3: {}", yes(over0), yes(overinf)),
        "rational points and x = +-1",
    );
    let search = x9prime_point_search(f.height)?;
    let expect_pts = [ZPoint::Finite(Rat::from_integer(0.into()), Rat::from_integer(0.into())), ZPoint::Infinity];
    let shown: Vec<String> = search
        .points
        .iter()
        .map(|p| match p {
            ZPoint::Finite(a, b) => format!("({a}, {b})"),
            ZPoint::Infinity => "infinity".to_string(),
        })
        .collect();
    s.line(format!("rational points (z1, z2) with height(z1) <= {}: {}", f.height, shown.join(", ")));
    s.check(
        "points",
        search.points == expect_pts && search.images_are_torsion,
        "(0,0) and infinity, images torsion",
        format!("{} point(s), images torsion {}", search.points.len(), yes(search.images_are_torsion)),
        "rational points of X(9)/<T'>",
    );
    let e = WeierstrassCurve::from_ints([0, 0, 1, 0, 0])?;
    let t = torsion_points(&e)?;
    let pts: Vec<String> = t.points.iter().map(Point::to_string).collect();
    s.check(
        "torsion",
        pts == ["O", "(0,-1)", "(0,0)"],
        "{O, (0,0), (0,-1)}",
        pts.join(", "),
        "torsion of Y^2 + Y = X^3",
    );
    Ok(())
}

fn curves(f: &Flags, s: &mut Section) -> Result<(), Error> {
    for c in check_table()? {
        let id = format!("table_x_{}_{}", c.x.0, c.x.1).replace('-', "m");
        s.check(
            &id,
            c.passes(),
            format!("j = {}, N = {:?}", c.j_printed, c.conductor_printed),
            format!(
                "f(x) = {}, j(E) = {}, N = {:?}",
                c.f_value.as_ref().map(|v| v.to_string()).unwrap_or("pole".into()),
                c.j_curve,
                c.conductor
            ),
            "table of integral values",
        );
    }
    let mut classes = Vec::new();
    for row in &reference::TABLE {
        classes.push(mod3_image_class(&WeierstrassCurve::from_ints(row.curve)?));
    }
    s.check(
        "mod3_surjective",
        classes.iter().all(|c| *c == Mod3Image::Surjective),
        "every table curve surjective mod 3",
        format!("{classes:?}"),
        "surjectivity mod 3",
    );
    let g = classify_gl2_f3()?;
    s.check(
        "gl2_f3",
        g.group_order == 48 && g.sl2_index == 2 && g.criterion_holds,
        "|GL2(F3)| = 48, index 2, criterion holds on every subgroup",
        format!("{} subgroups in {} classes, criterion {}", g.subgroups, g.conjugacy_classes, yes(g.criterion_holds)),
        "subgroups of GL2(F3)",
    );
    s.erratum(
        "criterion_polarity",
        g.criterion_holds && g.literal_reading_failures > 0,
        "surjective iff the intersection lies in the Klein group or a 3-cycle group",
        format!(
            "containment characterizes the proper subgroups; the literal reading fails on {} of {} subgroups with surjective det",
            g.literal_reading_failures, g.surjective_det
        ),
        "mod-3 surjectivity criterion",
    );
    let gp = extend_to_gprime(&group_g())?.group;
    let e = WeierstrassCurve::from_ints([0, 0, 0, -27, -42])?;
    let r = frobenius_mod9_check(&e, &gp, f.pmax)?;
    s.check(
        "frobenius_g_prime",
        r.all_pass() && r.fingerprints_mod3.len() == 6,
        format!("every good p < {} realized in G', 6 fingerprints mod 3", f.pmax),
        format!("{} primes, {} failures, {} fingerprints", r.checked.len(), r.failures.len(), r.fingerprints_mod3.len()),
        "image mod 9 in G'",
    );
    let ctrl = frobenius_mod9_check(&WeierstrassCurve::from_ints([0, 0, 0, 1, 1])?, &gp, 100)?;
    s.check(
        "frobenius_control",
        !ctrl.all_pass(),
        "some p < 100 outside G'",
        format!("first failure at p = {}", ctrl.failures.first().map(|d| d.p.to_string()).unwrap_or("none".into())),
        "control curve",
    );
    Ok(())
}

fn integral(f: &Flags, s: &mut Section) -> Result<(), Error> {
    let bound = f.height.max(3);
    let t = thue_search(bound);
    let mut one: Vec<(i64, i64)> = t[&1].iter().map(|x| (x.m, x.n)).collect();
    let mut want = THUE_ONE.to_vec();
    one.sort_unstable();
    want.sort_unstable();
    s.check("thue_one", one == want, format!("{want:?}"), format!("{one:?}"), "Thue equation = 1");
    let mut minus: Vec<(i64, i64)> = t[&-1].iter().map(|x| (-x.m, -x.n)).collect();
    minus.sort_unstable();
    s.check("thue_minus_one", minus == want, "negations of the six", format!("{minus:?}"), "Thue equation = -1");
    let xs3 = |v: i64| {
        let mut xs: Vec<(i64, i64)> = t[&v].iter().map(|x| x.x()).collect();
        xs.sort_unstable();
        xs.dedup();
        xs
    };
    let mut want3 = THUE_THREE_X.to_vec();
    want3.sort_unstable();
    s.check(
        "thue_three",
        xs3(3) == want3 && xs3(-3) == want3,
        format!("{want3:?}"),
        format!("{:?} / {:?}", xs3(3), xs3(-3)),
        "Thue equation = +-3",
    );
    let l = mod9_denominator_lemma();
    s.check("mod9_lemma", l.holds && l.pairs == 81, "holds on 81 pairs", format!("{} on {} pairs", yes(l.holds), l.pairs), "mod-9 lemma");
    let sweep = f.height.min(256);
    let iv = integral_values(bound, sweep);
    s.line(format!("integral values of f (Thue bound {bound}, height sweep {sweep}):"));
    for r in &iv.rows {
        let x = if r.x.1 == 0 { "1/0".to_string() } else if r.x.1 == 1 { r.x.0.to_string() } else { format!("{}/{}", r.x.0, r.x.1) };
        s.line(format!("  x = {x:>5}  F(m,n) = {:>2}  f(x) = {}", r.denominator_form, r.f));
    }
    let want_x = [(-3, 2), (-2, 1), (-1, 1), (-1, 2), (-1, 3), (0, 1), (1, 0), (1, 1), (2, 1)];
    let got_x: Vec<(i64, i64)> = iv.rows.iter().map(|r| r.x).collect();
    s.check("integral_x", got_x == want_x, format!("{want_x:?}"), format!("{got_x:?}"), "integral values of f");
    s.check(
        "height_sweep",
        iv.extra_from_sweep.is_empty(),
        format!("no further integral values to height {sweep}"),
        format!("{} extra", iv.extra_from_sweep.len()),
        "search for further integral values",
    );
    let forms_ok = iv.rows.iter().all(|r| [1, -1, 3, -3].contains(&r.denominator_form));
    s.check("denominator_forms", forms_ok, "F(m,n) in {+-1, +-3}", yes(forms_ok), "reduction to Thue equations");
    let mut all_obstruct = true;
    for (m, n) in reduced_fractions(50) {
        all_obstruct &= cube_obstruction(&rat(m, n))?.obstructs();
    }
    let ex = [cube_obstruction(&rat(0, 1))?.v3, cube_obstruction(&rat(1, 1))?.v3];
    s.check(
        "cube_obstruction",
        cube_identity_holds() && all_obstruct && ex == [1, 2],
        "identity holds; v3 not divisible by 3 to height 50; v3 = 1, 2 at x = 0, 1",
        format!("identity {}, sweep {}, examples {ex:?}", yes(cube_identity_holds()), yes(all_obstruct)),
        "3-adic obstruction",
    );
    let fx = cover::cover_f();
    let mut never_cube = true;
    for (m, n) in reduced_fractions(20) {
        if let Some(v) = cover::evaluate_f_proj(&fx, &m.into(), &n.into()) {
            never_cube &= num_is_zero(&v) || !is_rational_cube(&v);
        }
    }
    s.check("f_never_cube", never_cube, "f(x) never a nonzero cube", yes(never_cube), "f is not a cube");
    Ok(())
}

fn num_is_zero(r: &Rat) -> bool {
    *r == Rat::from_integer(0.into())
}
