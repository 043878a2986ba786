//! Acceptance suite: every closed-form computation is checked against the
//! independent module oracle and against brute force at desk scale. One test
//! per criterion; each prints a pass line when it gets through.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use infgon::arc::int;
use infgon::oracle;
use infgon::verify::{ext_criterion, hom_table, window_arcs};
use infgon::{
    apply_schedule, approximations, classify, exchange_graph, exchange_sequences, ext1_dim, flip,
    hom_dim, is_cluster_tilting, is_maximal_almost_rigid, is_maximal_rigid, is_mutable, is_rigid,
    mutate_subcategory, precover, stable_hom_dim, Ambient, ApproxSide, ApproximationOutcome, Arc,
    ArcSetDescriptor, Configuration, Direction, Error, Interval, MaximalRigidCase, Schedule,
    Selector, SideTail, TailSpec, TriangulationDescriptor, ZigStep,
};

const WINDOW: i64 = 6;

#[test]
fn criterion_01_hom_table_reproduction() {
    let arcs = window_arcs(WINDOW);
    let mut pairs = 0usize;
    for x in &arcs {
        for y in &arcs {
            pairs += 1;
            let closed = hom_dim(x, y);
            assert_eq!(
                closed,
                hom_table(x, y),
                "hom_dim({x},{y}) disagrees with the four-case table"
            );
            let solved = oracle::hom_space(&x.module(), &y.module()).dimension;
            assert_eq!(
                closed, solved,
                "hom_dim({x},{y}) disagrees with the module oracle"
            );
        }
    }
    assert!(pairs >= 8000, "expected about 8000 ordered pairs, got {pairs}");
    println!("criterion 1 (hom table reproduction, {pairs} pairs): PASS");
}

#[test]
fn criterion_02_ext_criterion() {
    let arcs = window_arcs(WINDOW);
    for x in &arcs {
        for y in &arcs {
            let closed = ext1_dim(x, y);
            assert_eq!(closed, ext_criterion(x, y), "criterion at ({x},{y})");
            let solved = oracle::ext1_oracle(&x.module(), &y.module());
            assert_eq!(closed, solved, "oracle ext at ({x},{y})");
            if x.is_finite() && y.is_finite() {
                assert_eq!(closed, ext1_dim(y, x), "finite symmetry at ({x},{y})");
            }
            if x.is_boundary() || y.is_boundary() {
                assert_eq!(closed, 0, "boundary ext at ({x},{y})");
            }
        }
    }
    println!("criterion 2 (Ext criterion, oracle + symmetry + boundary): PASS");
}

#[test]
fn criterion_03_endomorphism_ring() {
    let report = oracle::ext_graded_endring(&infgon::ModuleLabel::poly_quot(0), 5);
    assert_eq!(report.dimensions, vec![1, 1, 1, 1, 1, 1]);
    assert!(report.degree_one_non_nilpotent);
    println!("criterion 3 (graded endomorphism ring of C[y]): PASS");
}

#[test]
fn criterion_04_exchange_sequences() {
    let arcs = window_arcs(WINDOW);
    let mut extension_pairs = Vec::new();
    for x in &arcs {
        for y in &arcs {
            if ext1_dim(y, x) == 1 {
                extension_pairs.push((x.clone(), y.clone()));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x1f90);
    extension_pairs.shuffle(&mut rng);
    let sample = &extension_pairs[..200.min(extension_pairs.len())];
    assert_eq!(sample.len(), 200);
    for (x, y) in sample {
        let seqs = exchange_sequences(x, y);
        assert_eq!(seqs.len(), 1, "exactly one sequence for {x} -> {y}");
        for seq in &seqs {
            assert!(
                oracle::verify_exact(seq, 3).unwrap(),
                "exactness (margin 3) for {x} -> {y}"
            );
            assert!(
                oracle::verify_exact(seq, 5).unwrap(),
                "margin stability (margin 5) for {x} -> {y}"
            );
            assert!(
                !oracle::is_split_mono(seq),
                "inclusion splits for {x} -> {y}"
            );
        }
    }
    println!("criterion 4 (200 exchange sequences exact, margin-stable, non-split): PASS");
}

fn mutable_arcs_t1() -> TriangulationDescriptor {
    let d = ArcSetDescriptor::new(
        Interval::of(-2, 2),
        vec![Arc::inf(-1), Arc::inf(0), Arc::inf(1)],
        Some(TailSpec::Sided {
            left: SideTail::Fountain(int(-1)),
            right: SideTail::Fountain(int(1)),
        }),
    )
    .unwrap();
    TriangulationDescriptor::new(d).unwrap()
}

fn mutable_arcs_t2() -> TriangulationDescriptor {
    let d = ArcSetDescriptor::new(
        Interval::of(-2, 2),
        vec![Arc::inf(0), Arc::fin(-2, 0), Arc::fin(0, 2)],
        Some(TailSpec::Sided {
            left: SideTail::Fountain(int(0)),
            right: SideTail::Fountain(int(0)),
        }),
    )
    .unwrap();
    TriangulationDescriptor::new(d).unwrap()
}

#[test]
fn criterion_05_mutation_fidelity() {
    // first triangulation: (-inf, 0) flips to (-1, 1)
    let t1 = mutable_arcs_t1();
    assert!(is_mutable(&t1, &Arc::inf(0)).unwrap());
    let res = flip(&t1, &Arc::inf(0)).unwrap();
    assert_eq!(res.added, Arc::fin(-1, 1));

    // second triangulation: (-inf, 0) is a wrapping arc
    let t2 = mutable_arcs_t2();
    assert!(!is_mutable(&t2, &Arc::inf(0)).unwrap());
    assert!(flip(&t2, &Arc::inf(0)).is_err());

    // why-both-sides: left approximation absent at (-inf, -1), right found
    // via (-inf, 0), mutation refused
    let approx = approximations(&t1, &Arc::inf(-1)).unwrap();
    match &approx.left {
        ApproxSide::Absent { witness } => assert!(!witness.is_empty()),
        _ => panic!("left approximation must be absent"),
    }
    match &approx.right {
        ApproxSide::Found { completion, .. } => assert_eq!(completion, &Arc::inf(0)),
        _ => panic!("right approximation must exist via (-inf, 0)"),
    }
    match mutate_subcategory(&t1, &Arc::inf(-1), Direction::Right) {
        Err(Error::NotMutable { .. }) => {}
        other => panic!("mutation must be refused, got {other:?}"),
    }
    println!("criterion 5 (mutation fidelity on the worked examples): PASS");
}

/// Random validated triangulation over a window around [-4, 4].
fn random_triangulation(rng: &mut StdRng) -> TriangulationDescriptor {
    let window = Interval::of(-4, 4);
    let shape = rng.gen_range(0..5u8);
    let seed = match shape {
        0 => {
            // zig-zag with a random base and pattern
            let a = rng.gen_range(-2..=0i64);
            let b = rng.gen_range((a + 2)..=2i64);
            let base = Arc::fin(a, b);
            let mut pattern = vec![ZigStep::Left, ZigStep::Right];
            for _ in 0..rng.gen_range(0..3) {
                pattern.push(if rng.gen_bool(0.5) {
                    ZigStep::Left
                } else {
                    ZigStep::Right
                });
            }
            ArcSetDescriptor::new(
                window.clone(),
                vec![base.clone()],
                Some(TailSpec::ZigZag { base, pattern }),
            )
            .unwrap()
        }
        1 => ArcSetDescriptor::new(
            window.clone(),
            (-4..=4).map(Arc::inf).collect(),
            Some(TailSpec::Sided {
                left: SideTail::Fan,
                right: SideTail::Fan,
            }),
        )
        .unwrap(),
        2 => {
            // fountain at a random vertex, with its wrap
            let a = rng.gen_range(-2..=2i64);
            ArcSetDescriptor::new(
                window.clone(),
                vec![Arc::inf(a)],
                Some(TailSpec::Sided {
                    left: SideTail::Fountain(int(a)),
                    right: SideTail::Fountain(int(a)),
                }),
            )
            .unwrap()
        }
        3 => {
            // left fan, right fountain at b: wraps at b and below
            let b = rng.gen_range(-1..=2i64);
            ArcSetDescriptor::new(
                window.clone(),
                (-4..=b).map(Arc::inf).collect(),
                Some(TailSpec::Sided {
                    left: SideTail::Fan,
                    right: SideTail::Fountain(int(b)),
                }),
            )
            .unwrap()
        }
        _ => {
            // left fountain at a, right fan: wraps at a and above
            let a = rng.gen_range(-2..=1i64);
            ArcSetDescriptor::new(
                window.clone(),
                (a..=4).map(Arc::inf).collect(),
                Some(TailSpec::Sided {
                    left: SideTail::Fountain(int(a)),
                    right: SideTail::Fan,
                }),
            )
            .unwrap()
        }
    };
    // randomized greedy completion
    let mut d = seed;
    loop {
        let cands = d.addable_candidates();
        if cands.is_empty() {
            break;
        }
        let pick = cands[rng.gen_range(0..cands.len())].clone();
        d = d.with_arc(pick).unwrap();
    }
    TriangulationDescriptor::new(d).unwrap()
}

#[test]
fn criterion_06_involution_and_preservation() {
    let mut rng = StdRng::seed_from_u64(0x90f1);
    let region = Interval::of(-5, 5);
    let mut flips = 0usize;
    for _ in 0..1000 {
        let t = random_triangulation(&mut rng);
        let mutable: Vec<Arc> = t
            .materialize(&region)
            .into_iter()
            .filter(|a| is_mutable(&t, a).unwrap_or(false))
            .collect();
        if mutable.is_empty() {
            continue;
        }
        let g = mutable[rng.gen_range(0..mutable.len())].clone();
        let once = flip(&t, &g).unwrap();
        assert!(
            once.new_triangulation.descriptor().validate().is_ok(),
            "flip output failed validation"
        );
        let back = flip(&once.new_triangulation, &once.added).unwrap();
        assert_eq!(back.added, g, "second flip must restore the removed arc");
        assert!(
            back.new_triangulation.same_arc_set(&t),
            "flip twice differs from the original"
        );
        flips += 1;
    }
    assert!(flips >= 900, "too few successful flips: {flips}");
    println!("criterion 6 (flip involution + validation on {flips} random flips): PASS");
}

#[test]
fn criterion_07_classification_hierarchy() {
    // DoubleFan: maximal almost rigid but not rigid
    let fan = ArcSetDescriptor::new(
        Interval::of(-1, 1),
        vec![Arc::inf(-1), Arc::inf(0), Arc::inf(1)],
        Some(TailSpec::Sided {
            left: SideTail::Fan,
            right: SideTail::Fan,
        }),
    )
    .unwrap();
    assert!(is_maximal_almost_rigid(&fan));
    assert!(!is_rigid(&fan));
    assert_eq!(
        classify(&TriangulationDescriptor::new(fan.clone()).unwrap()),
        Configuration::DoubleFan
    );

    // zig-zag: cluster tilting in the generically free ambient only, with a
    // precover failure witness in the full category
    let zig = ArcSetDescriptor::new(
        Interval::of(-3, 3),
        vec![Arc::fin(-1, 1)],
        Some(TailSpec::ZigZag {
            base: Arc::fin(-1, 1),
            pattern: vec![ZigStep::Left, ZigStep::Right],
        }),
    )
    .unwrap();
    assert!(is_cluster_tilting(&zig, Ambient::GenericallyFree).unwrap());
    assert!(!is_cluster_tilting(&zig, Ambient::Full).unwrap());
    match precover(&zig, &Arc::inf(0)).unwrap() {
        ApproximationOutcome::Absent { family } => assert!(!family.is_empty()),
        _ => panic!("locally finite triangulation must fail to precover"),
    }

    // split fountain with one wrap: maximal rigid case 2, not cluster tilting
    let split = ArcSetDescriptor::new(
        Interval::of(-1, 1),
        vec![Arc::inf(-1), Arc::fin(-1, 1)],
        Some(TailSpec::Sided {
            left: SideTail::Fountain(int(-1)),
            right: SideTail::Fountain(int(1)),
        }),
    )
    .unwrap();
    assert_eq!(
        is_maximal_rigid(&split),
        Some(MaximalRigidCase::SplitFountainOneWrap)
    );
    assert!(!is_cluster_tilting(&split, Ambient::Full).unwrap());

    // fountain: cluster tilting in both ambients
    let fountain = mutable_arcs_t2().into_descriptor();
    assert_eq!(is_maximal_rigid(&fountain), Some(MaximalRigidCase::Fountain));
    assert!(is_cluster_tilting(&fountain, Ambient::Full).unwrap());
    let fountain_free = ArcSetDescriptor::new(
        Interval::of(-2, 2),
        vec![Arc::fin(-2, 0), Arc::fin(0, 2)],
        Some(TailSpec::Sided {
            left: SideTail::Fountain(int(0)),
            right: SideTail::Fountain(int(0)),
        }),
    )
    .unwrap();
    assert!(is_cluster_tilting(&fountain_free, Ambient::GenericallyFree).unwrap());
    println!("criterion 7 (rigidity and cluster-tilting hierarchy): PASS");
}

#[test]
fn criterion_08_flip_graph_catalan() {
    let catalan = [1usize, 2, 5, 14, 42, 132, 429];
    for (n, expected) in catalan.iter().enumerate() {
        let polygon = (n as u32) + 3;
        let g = exchange_graph(polygon).unwrap();
        assert_eq!(
            g.vertices, *expected,
            "triangulation count of the {polygon}-gon"
        );
        assert!(g.connected, "flip graph of the {polygon}-gon disconnected");
    }
    println!("criterion 8 (flip-graph vertex counts are Catalan, connected): PASS");
}

#[test]
fn criterion_09_schedule_stabilization() {
    let fan = TriangulationDescriptor::new(
        ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::inf(-1), Arc::inf(0), Arc::inf(1)],
            Some(TailSpec::Sided {
                left: SideTail::Fan,
                right: SideTail::Fan,
            }),
        )
        .unwrap(),
    )
    .unwrap();
    let mut last = 0usize;
    for n in 2..=6i64 {
        let schedule = Schedule {
            steps: vec![Selector::TowardFountain(int(0))],
            repeat: 40,
            budget: 40,
        };
        let out = apply_schedule(&fan, &schedule, &Interval::of(-n, n));
        assert!(out.halted.is_none(), "schedule halted unexpectedly");
        let st = out
            .stabilized_after
            .unwrap_or_else(|| panic!("no stabilization on [-{n}, {n}]"));
        assert!(
            st >= last,
            "stabilization step not monotone: {st} after {last} at N = {n}"
        );
        last = st;
        // the stabilized restriction shows the fountain at 0
        let arcs = out
            .trajectory
            .last()
            .unwrap()
            .materialize(&Interval::of(-n, n));
        assert!(arcs.contains(&Arc::inf(0)));
        assert!(arcs.contains(&Arc::fin(0, 2)));
    }
    println!("criterion 9 (fan-to-fountain schedule stabilizes, monotone in N): PASS");
}

#[test]
fn criterion_10_stable_hom_convention() {
    let arcs = window_arcs(WINDOW);
    for x in &arcs {
        for y in &arcs {
            let closed = stable_hom_dim(x, y);
            let solved = oracle::stable_hom_space(&x.module(), &y.module()).dimension;
            assert_eq!(
                closed, solved,
                "stable hom convention broken at ({x},{y})"
            );
        }
    }
    println!("criterion 10 (stable-Hom shift convention certified): PASS");
}
