//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Run with `cargo test -p ellone-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ellone::complex::OrientedComplex;
use ellone::corpus;
use ellone::covering::{
    average_primitive, bar_to_cochains, datum, integrate_degree1, transfer, ExtensionProblem, LineBruhat, LineCover,
};
use ellone::groupcoh::{extend_to_bar, group_cohomology, BarCochain, Caps, FiniteGroup, SetResolution, StrongResolution};
use ellone::homology::{cohomology_rank, coboundary_primitive, cohomology_basis, homology_rank};
use ellone::rational::{int, max_abs, rat};
use ellone::seminorm::{duality_check, fundamental_class, DualityStatus};
use ellone::simplicial::affine::AffineChain;
use ellone::simplicial::local::{Coboundary, ExtendedCochain, Sum};
use ellone::simplicial::subdivision::{iterated_counts, DEFAULT_ROUND_CAP};
use ellone::simplicial::{omega_dual_locally_zero, prism, sd, AffineCochain, AffineSimplex, OpenCover, SubdividedComplex};
use ellone::{kronecker, Chain, Cochain, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-6..=6), r.gen_range(1..=4))
}

fn random_values(r: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(r)).collect()
}

fn random_chain(r: &mut ChaCha8Rng, k: &OrientedComplex, d: usize) -> Chain {
    Chain::from_dense(d, &random_values(r, k.count(d)))
}

fn random_cochain(r: &mut ChaCha8Rng, k: &OrientedComplex, d: usize) -> Cochain {
    Cochain::from_dense(d, &random_values(r, k.count(d)))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Three or more covers: the whole complex, open stars, closed stars, and for
/// each pair of vertices `a < b` among the first three the cover by
/// `K - {a}` and `K - {b}` (small simplices are those missing `a` or `b`).
fn covers(k: &OrientedComplex) -> Vec<(String, OpenCover)> {
    let mut out = vec![
        ("whole".to_string(), OpenCover::whole(k)),
        ("open_stars".to_string(), OpenCover::open_stars(k)),
        ("closed_stars".to_string(), OpenCover::closed_stars(k)),
    ];
    let n = k.vertex_count().min(3);
    for a in 0..n {
        for b in a + 1..n {
            out.push((format!("antistars_{a}_{b}"), antistars(k, a, b)));
        }
    }
    out
}

fn antistars(k: &OrientedComplex, a: usize, b: usize) -> OpenCover {
    let minus = |v: usize| -> Vec<Vec<usize>> {
        k.layers().iter().flatten().filter(|s| s.as_slice() != [v]).cloned().collect()
    };
    OpenCover::new(k, vec![(format!("K-{a}"), minus(a)), (format!("K-{b}"), minus(b))]).expect("antistar cover")
}

fn criterion_1() -> Outcome {
    let corpus = corpus::standard();
    ensure!(corpus.len() >= 10, "corpus has only {} complexes", corpus.len());
    let mut r = rng(1);
    let mut checks = 0;
    for (name, k) in &corpus {
        for _ in 0..100 {
            let d = r.gen_range(0..=k.dim());
            let c = random_chain(&mut r, k, d);
            if d >= 2 {
                let dd = k.boundary(&k.boundary(&c).map_err(err)?).map_err(err)?;
                ensure!(dd.is_zero(), "{name}: d d c != 0 in degree {d}");
            }
            if d >= 1 {
                let f = random_cochain(&mut r, k, d - 1);
                let left = kronecker(&k.coboundary(&f).map_err(err)?, &c).map_err(err)?;
                let right = kronecker(&f, &k.boundary(&c).map_err(err)?).map_err(err)?;
                ensure!(left == right, "{name}: <delta f, c> = {left} but <f, dc> = {right}");
            }
            checks += 1;
        }
    }
    Ok(format!("{} complexes, {checks} random chains", corpus.len()))
}

fn criterion_2() -> Outcome {
    let mut identities = 0;
    let mut covers_used = 0;
    for (name, k) in corpus::standard().into_iter().filter(|(_, k)| k.dim() <= 2) {
        let sub = SubdividedComplex::new(&k);
        for d in 0..=k.dim() {
            for i in 0..k.count(d) {
                let c = k.simplex_chain(d, i);
                let a = AffineChain::embed(&k, &c).map_err(err)?;
                // d sd = sd d, affinely and on the subdivision complex
                ensure!(sd(&a).boundary() == sd(&a.boundary()), "{name}: d sd != sd d on {:?}", k.simplex(d, i));
                if d >= 1 {
                    let left = sub.complex().boundary(&sub.sd_chain(&c).map_err(err)?).map_err(err)?;
                    let right = sub.sd_chain(&k.boundary(&c).map_err(err)?).map_err(err)?;
                    ensure!(left == right, "{name}: combinatorial d sd != sd d");
                }
                // dD + Dd = sd - Id
                let mut homotopy = prism(&a).boundary();
                if d >= 1 {
                    homotopy = homotopy.plus(&prism(&a.boundary()));
                }
                ensure!(homotopy == sd(&a).minus(&a), "{name}: dD + Dd != sd - Id on {:?}", k.simplex(d, i));
                identities += 1;
            }
        }
        let list = covers(&k);
        ensure!(list.len() >= 3, "{name}: fewer than three covers");
        for (label, cover) in &list {
            for d in 0..=k.dim() {
                for s in k.simplices(d) {
                    let a = AffineChain::simplex(AffineSimplex::from_vertices(s));
                    let tau = cover.tau(&a).map_err(err)?;
                    ensure!(
                        tau.iter().all(|(p, _)| cover.is_small(p)),
                        "{name}/{label}: tau of {s:?} is not small"
                    );
                    let left = tau.minus(&a);
                    let mut right = cover.omega(&a).map_err(err)?.boundary();
                    if d >= 1 {
                        right = right.plus(&cover.omega(&a.boundary()).map_err(err)?);
                    }
                    ensure!(left == right, "{name}/{label}: j tau - Id != d Omega + Omega d on {s:?}");
                    identities += 1;
                }
            }
            covers_used += 1;
        }
    }
    Ok(format!("{identities} identities, {covers_used} (complex, cover) pairs"))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let mut built = 0;
    let mut probes = 0;
    let complexes: Vec<_> = corpus::standard().into_iter().filter(|(_, k)| k.dim() >= 2).collect();
    for (name, k) in &complexes {
        for (label, cover) in covers(k).into_iter().filter(|(l, _)| l != "whole" && l != "closed_stars") {
            for gd in 1..k.dim() {
                // g vanishes on the small simplices of K and on every other affine simplex
                let g = Cochain::from_pairs(
                    gd,
                    (0..k.count(gd))
                        .filter(|&i| !cover.is_small(&AffineSimplex::from_vertices(k.simplex(gd, i))))
                        .map(|i| (i, random_rational(&mut r))),
                );
                if g.is_zero() {
                    continue;
                }
                let ext = ExtendedCochain::new(k, &g).map_err(err)?;
                let f = Coboundary(&ext);
                let omega = omega_dual_locally_zero(k, &cover, &f).map_err(err)?;
                let total = Sum(&f, Coboundary(&omega));
                let mut family: Vec<AffineSimplex> = Vec::new();
                for s in k.simplices(gd + 1) {
                    let a = AffineChain::simplex(AffineSimplex::from_vertices(s));
                    family.extend(sd(&a).iter().map(|(p, _)| p.clone()));
                    family.extend(a.iter().map(|(p, _)| p.clone()));
                }
                let f_on_k = f.restrict(k).map_err(err)?;
                ensure!(!f_on_k.is_zero() || gd + 1 > k.dim(), "{name}/{label}: constructed cocycle vanishes on K");
                for s in &family {
                    let v = total.eval_simplex(s).map_err(err)?;
                    ensure!(v.is_zero(), "{name}/{label}: f + delta Omega f = {v} on {s:?}");
                    probes += 1;
                }
                built += 1;
            }
        }
    }
    ensure!(built >= 20, "only {built} locally zero cocycles constructed");
    Ok(format!("{built} locally zero cocycles, {probes} affine simplices"))
}

fn criterion_4() -> Outcome {
    // On a 1-dimensional complex there are no 2-chains, so the l1 seminorm of a
    // 1-cycle is its l1 norm.
    let three = corpus::circle(3);
    let report = duality_check(&three, &corpus::circle_cycle(3)).map_err(err)?;
    let oracle = corpus::circle_cycle(3).l1_norm();
    ensure!(oracle == int(3), "oracle l1 norm of the 3-edge circle is {oracle}");
    ensure!(report.l1.value == oracle, "3-edge circle: l1 = {}", report.l1.value);
    ensure!(report.linf == Some(rat(1, 3)), "3-edge circle: dual optimum {:?}", report.linf);

    let spaces: Vec<(&str, OrientedComplex)> = vec![
        ("circle3", corpus::circle(3)),
        ("circle4", corpus::circle(4)),
        ("circle5", corpus::circle(5)),
        ("circle6", corpus::circle(6)),
        ("sphere", corpus::tetrahedron_boundary()),
        ("torus7", corpus::torus7()),
    ];
    for (name, k) in &spaces {
        let z = fundamental_class(k).map_err(err)?.chain;
        let report = duality_check(k, &z).map_err(err)?;
        ensure!(report.status == DualityStatus::Attained, "{name}: class degenerate");
        report.l1.certificate.verify(&report.l1.problem).map_err(err)?;
        report.dual_certificate.verify(&report.dual_problem).map_err(err)?;
        let linf = report.linf.clone().expect("attained");
        ensure!(report.l1.value == linf.recip(), "{name}: l1 {} vs 1/linf {}", report.l1.value, linf.recip());
        let cocycle = report.cocycle.as_ref().expect("attained");
        ensure!(k.coboundary_or_zero(cocycle).map_err(err)?.is_zero(), "{name}: dual optimum is not a cocycle");
        ensure!(kronecker(cocycle, &z).map_err(err)? == Rational::one(), "{name}: dual optimum does not pair to 1");
        // fundamental classes of closed pseudomanifolds are represented only by
        // multiples of themselves, so the l1 seminorm is the top simplex count
        let top = Rational::from_integer(k.count(k.dim()).into());
        ensure!(report.l1.value == top, "{name}: l1 {} vs {} top simplices", report.l1.value, top);
    }
    Ok(format!("{} fundamental cycles; 3-edge circle gives 3 and 1/3", spaces.len()))
}

fn criterion_5() -> Outcome {
    let k = corpus::point();
    let ranks: Vec<usize> = (0..=3).map(|i| if i <= k.dim() { cohomology_rank(&k, i) } else { 0 }).collect();
    ensure!(ranks == vec![1, 0, 0, 0], "cohomology ranks of the point: {ranks:?}");
    ensure!(homology_rank(&k, 0) == 1, "H_0 of the point has rank {}", homology_rank(&k, 0));
    for i in 1..=3 {
        ensure!(k.count(i) == 0, "point has simplices in degree {i}");
    }
    Ok("ranks 1, 0, 0, 0".into())
}

fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z/2", FiniteGroup::cyclic(2)),
        ("Z/3", FiniteGroup::cyclic(3)),
        ("Z/4", FiniteGroup::cyclic(4)),
        ("S3", FiniteGroup::symmetric3()),
    ]
}

fn criterion_6() -> Outcome {
    let mut summary = Vec::new();
    for (name, g) in groups() {
        for n in 0..=2 {
            let h = group_cohomology(&g, n, Caps::default()).map_err(err)?;
            let expected = usize::from(n == 0);
            ensure!(h.rank_homogeneous == expected, "{name}: H^{n} rank {} (homogeneous)", h.rank_homogeneous);
            ensure!(h.pipelines_agree(), "{name}: pipelines disagree in degree {n}");
            for c in &h.classes {
                ensure!(c.homogeneous == c.normalized, "{name}: seminorms differ in degree {n}");
            }
            if n == 0 {
                // the constant class 1 has norm 1
                ensure!(h.classes.len() == 1 && h.classes[0].homogeneous == int(1), "{name}: H^0 seminorm");
            }
        }
        summary.push(name);
    }
    Ok(format!("H^1 = H^2 = 0 for {}", summary.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut inputs = 0;
    for (name, g) in groups() {
        let bar = SetResolution::bar(&g);
        let free = SetResolution::free(&g, 2);
        for e in [&bar as &dyn StrongResolution, &free] {
            for _ in 0..100 {
                for n in 0..=2usize {
                    let v = random_values(&mut r, e.dim(n));
                    let image = extend_to_bar(e, n, &v).map_err(err)?;
                    ensure!(image.linf_norm() <= max_abs(&v), "{name}: norm increases in degree {n}");
                    let gen = r.gen_range(0..g.order());
                    let moved = extend_to_bar(e, n, &e.act(gen, n, &v)).map_err(err)?;
                    ensure!(moved == image.act(&g, gen), "{name}: not equivariant in degree {n}");
                    if n < 2 {
                        let left = extend_to_bar(e, n + 1, &e.differential(n, &v)).map_err(err)?;
                        ensure!(left == image.differential(), "{name}: not a chain map in degree {n}");
                    }
                }
                let c = random_rational(&mut r);
                let aug = extend_to_bar(e, 0, &e.augmentation(&c)).map_err(err)?;
                ensure!(aug == BarCochain::constant(g.order(), c), "{name}: augmentation not preserved");
                inputs += 1;
            }
        }
    }
    Ok(format!("{inputs} random inputs across bar and free resolutions"))
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let mut inputs = 0;
    let list = datum::examples::standard();
    for (name, cov) in &list {
        let h = cov.bruhat();
        let sums = cov.orbit_sums(&h);
        ensure!(sums.iter().all(|s| s.is_one()), "{name}: orbit sums of h are not all one");
        let group = cov.group();
        for degree in 0..=cov.total().dim().min(1) {
            let count = cov.total().count(degree);
            for _ in 0..100 {
                let choice = (0..count).map(|_| r.gen_range(0..2)).collect();
                let p = ExtensionProblem::new(cov, degree, choice, rat(r.gen_range(0..=4), 4)).map_err(err)?;
                let a = random_values(&mut r, p.a_dim());
                let b = random_values(&mut r, p.b_dim());
                ensure!(p.beta(&p.iota(&a)) == p.alpha(&a), "{name}: beta iota != alpha");
                let beta_b = p.beta(&b);
                ensure!(beta_b.linf_norm() <= max_abs(&b), "{name}: ||beta|| > 1");
                let g = r.gen_range(0..group.order());
                ensure!(p.beta(&p.act_b(g, &b)) == cov.act_cochain(g, &beta_b), "{name}: beta not equivariant");
                // bar cochains of the deck group to cochains of the cover
                let f = BarCochain::from_values(group.order(), degree, random_values(&mut r, group.order().pow(degree as u32 + 1)))
                    .map_err(err)?;
                let image = bar_to_cochains(cov, &h, &f).map_err(err)?;
                ensure!(image.linf_norm() <= f.linf_norm(), "{name}: bar map increases the norm");
                ensure!(
                    bar_to_cochains(cov, &h, &f.act(group, g)).map_err(err)? == cov.act_cochain(g, &image),
                    "{name}: bar map not equivariant"
                );
                if degree < cov.total().dim() {
                    let left = bar_to_cochains(cov, &h, &f.differential()).map_err(err)?;
                    ensure!(left == cov.total().coboundary(&image).map_err(err)?, "{name}: bar map not a chain map");
                }
                inputs += 1;
            }
        }
    }
    Ok(format!("{} coverings, {inputs} random inputs", list.len()))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut checked = 0;
    for k in [3usize, 4, 5] {
        let line = LineCover::new(k, LineBruhat::Hat);
        let base = line.base().clone();
        for y in -3 * k as i64..3 * k as i64 {
            ensure!(line.orbit_sum(y).is_one(), "k = {k}: orbit sum at {y} is not one");
        }
        for _ in 0..50 {
            let f = random_cochain(&mut r, &base, 1);
            let theta = line.theta(&f).map_err(err)?;
            let diff = &theta - &f;
            let primitive = coboundary_primitive(&base, &diff).map_err(err)?;
            let primitive = primitive.ok_or_else(|| format!("k = {k}: theta(f) - f is not a coboundary"))?;
            ensure!(base.coboundary(&primitive).map_err(err)? == diff, "k = {k}: primitive check failed");
            ensure!(theta.linf_norm() <= f.linf_norm(), "k = {k}: ||theta f|| = {} > {}", theta.linf_norm(), f.linf_norm());
            checked += 1;
        }
    }
    Ok(format!("{checked} random cocycles on the line over 3-, 4-, 5-edge circles"))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let list = transfer::examples::standard();
    ensure!(list.len() >= 3, "only {} transfer instances", list.len());
    for (name, d) in &list {
        let k = d.complex();
        let top = k.dim();
        for _ in 0..20 {
            for deg in 0..=top {
                let f = random_cochain(&mut r, k, deg);
                let invariant = d.average(&f);
                ensure!(d.transfer(&d.restrict(&invariant).map_err(err)?).map_err(err)? == invariant, "{name}: tr res != Id");
                let gamma_inv = d.gamma_average(&f);
                let t = d.transfer(&gamma_inv).map_err(err)?;
                ensure!(d.is_g_invariant(&t), "{name}: transfer of a subgroup-invariant cochain is not invariant");
                ensure!(t.linf_norm() <= gamma_inv.linf_norm(), "{name}: ||tr f|| > ||f||");
            }
        }
        // seminorms of invariant classes agree with both invariance groups
        let degree = top.min(2);
        let mut classes = cohomology_basis(k, degree);
        classes.push(random_cochain(&mut r, k, degree.saturating_sub(1)));
        for c in classes {
            let cocycle = if c.degree() == degree { c } else { k.coboundary(&c).map_err(err)? };
            let f = d.average(&cocycle);
            let report = d.res_isometry_check(&f).map_err(err)?;
            ensure!(report.equal, "{name}: seminorms {} vs {}", report.g_seminorm, report.gamma_seminorm);
        }
    }
    Ok(format!("{} (G, Gamma, X) instances", list.len()))
}

fn criterion_11() -> Outcome {
    let mut r = rng(11);
    let mut integrated = 0;
    for (name, k) in corpus::standard() {
        if !k.is_connected() || k.dim() == 0 {
            continue;
        }
        for _ in 0..10 {
            let f = k.coboundary(&random_cochain(&mut r, &k, 0)).map_err(err)?;
            let result = integrate_degree1(&k, &f).map_err(err)?;
            ensure!(k.coboundary(&result.primitive).map_err(err)? == f, "{name}: delta F != f");
            integrated += 1;
        }
        if homology_rank(&k, 1) > 0 {
            let bad = cohomology_basis(&k, 1).remove(0);
            ensure!(integrate_degree1(&k, &bad).is_err(), "{name}: integrated a cochain nonzero on a cycle");
        }
    }
    let mut averaged = 0;
    for (name, cov) in datum::examples::standard() {
        let base = cov.base();
        for _ in 0..10 {
            let g = random_cochain(&mut r, base, 0);
            let f = cov.lift_cochain(&base.coboundary(&g).map_err(err)?).map_err(err)?;
            let lifted = cov.lift_cochain(&g).map_err(err)?;
            // the lift plus a constant is still a primitive
            let c = random_rational(&mut r);
            let primitive = Cochain::from_pairs(0, (0..cov.total().vertex_count()).map(|v| (v, lifted.value(v) + &c)));
            let out = average_primitive(&cov, &f, &primitive).map_err(err)?;
            ensure!(cov.is_invariant(&out.invariant_part), "{name}: k is not invariant");
            ensure!(&out.averaged + &out.invariant_part == primitive, "{name}: F != F_c + k");
            averaged += 1;
        }
    }
    Ok(format!("{integrated} primitives, {averaged} averaged primitives"))
}

fn criterion_12() -> Outcome {
    let counts = iterated_counts(&corpus::simplex(2), 3, DEFAULT_ROUND_CAP).map_err(err)?;
    let tops: Vec<usize> = counts.iter().skip(1).map(|c| c[2]).collect();
    ensure!(tops == vec![6, 36, 216], "top simplex counts {tops:?}");
    // every round multiplies the top count by (n+1)!
    ensure!(tops.iter().enumerate().all(|(r, &t)| t == 6usize.pow(r as u32 + 1)), "growth is not (n+1)!");
    for w in counts.windows(2) {
        ensure!(w[1] == subdivision_oracle(&w[0]), "counts {:?} do not follow {:?}", w[1], w[0]);
    }
    let k = corpus::torus_grid(25, 20);
    ensure!(k.count(2) == 1000, "grid has {} triangles", k.count(2));
    let start = Instant::now();
    let sub = SubdividedComplex::new(&k);
    let elapsed = start.elapsed();
    let got: Vec<usize> = (0..=2).map(|d| sub.complex().count(d)).collect();
    let original: Vec<usize> = (0..=2).map(|d| k.count(d)).collect();
    ensure!(got == subdivision_oracle(&original), "torus grid subdivision counts {got:?}");
    ensure!(elapsed < Duration::from_secs(10), "one round took {elapsed:?}");
    Ok(format!("6, 36, 216; 1000 triangles -> {} in {:.2?}", got[2], elapsed))
}

/// `d`-simplices of `sd K`: chains `s_0 < ... < s_d` of faces, counted by the
/// top face `s_d` of dimension `m` as ordered partitions of its `m + 1`
/// vertices into `d + 1` blocks, `(d + 1)! S(m + 1, d + 1)`.
fn subdivision_oracle(counts: &[usize]) -> Vec<usize> {
    let top = counts.len();
    let mut stirling = vec![vec![0usize; top + 1]; top + 1];
    stirling[0][0] = 1;
    for n in 1..=top {
        for j in 1..=n {
            stirling[n][j] = j * stirling[n - 1][j] + stirling[n - 1][j - 1];
        }
    }
    let factorial = |n: usize| (1..=n).product::<usize>();
    (0..top)
        .map(|d| (d..top).map(|m| counts[m] * factorial(d + 1) * stirling[m + 1][d + 1]).sum())
        .collect()
}

struct Criterion {
    number: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let list = [
        Criterion { number: 1, name: "chain complex laws", limit: Some(Duration::from_secs(5)), run: criterion_1 },
        Criterion { number: 2, name: "subdivision identities", limit: Some(Duration::from_secs(30)), run: criterion_2 },
        Criterion { number: 3, name: "locally zero cocycles", limit: None, run: criterion_3 },
        Criterion { number: 4, name: "l1/linf duality", limit: None, run: criterion_4 },
        Criterion { number: 5, name: "dimension axiom", limit: None, run: criterion_5 },
        Criterion { number: 6, name: "finite group cohomology", limit: Some(Duration::from_secs(60)), run: criterion_6 },
        Criterion { number: 7, name: "extension to the bar resolution", limit: None, run: criterion_7 },
        Criterion { number: 8, name: "Bruhat averaging", limit: None, run: criterion_8 },
        Criterion { number: 9, name: "theta on the line", limit: None, run: criterion_9 },
        Criterion { number: 10, name: "transfer", limit: None, run: criterion_10 },
        Criterion { number: 11, name: "degree-one primitives", limit: None, run: criterion_11 },
        Criterion { number: 12, name: "subdivision benchmark", limit: None, run: criterion_12 },
    ];
    let mut failures = 0;
    for c in &list {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} [{elapsed:.2?}]", c.number, c.name),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {}: {reason} [{elapsed:.2?}]", c.number, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", list.len() - failures, list.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
