use std::path::{Path, PathBuf};

use dualis::dualize::{check_diagram, double_dual_check, dual};
use dualis::io::{parse_ideal, parse_polynomial, print_document, IdealDocument};
use dualis::{Engine, Polynomial, Rational};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load(name: &str) -> IdealDocument {
    let text = std::fs::read_to_string(corpus_dir().join(name)).unwrap();
    parse_ideal(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn all() -> Vec<(String, IdealDocument)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".ideal"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

#[test]
fn every_file_parses_and_round_trips() {
    let docs = all();
    assert!(docs.len() >= 20);
    for (name, doc) in docs {
        assert!(!doc.metadata.is_empty(), "{name} has no name line");
        let printed = print_document(&doc.ideal());
        let back = parse_ideal(&printed).unwrap();
        assert_eq!(back.ideal(), doc.ideal(), "{name}");
        assert_eq!(print_document(&back.ideal()), printed, "{name}");
    }
}

#[test]
fn euler_identity_on_homogeneous_generators() {
    for (name, doc) in all() {
        for g in doc.generators.iter().filter(|g| g.is_homogeneous()) {
            let mut sum = Polynomial::zero(&doc.ring);
            for i in 0..doc.ring.len() {
                sum = &sum + &(&Polynomial::variable(&doc.ring, i).unwrap() * &g.partial_derivative(i).unwrap());
            }
            let deg = Rational::from_integer(g.total_degree().unwrap().into());
            assert_eq!(sum, g.scale(&deg), "{name}: {g}");
        }
    }
}

#[test]
fn golden_duals() {
    let engine = Engine::default();
    let pairs = [
        ("steiner", "steiner_dual"),
        ("steiner_dual", "steiner"),
        ("quadric_cone", "quadric_cone_dual"),
        ("intersection", "intersection_dual"),
        ("neil", "neil_dual"),
        ("newton_knot", "newton_knot_dual"),
        ("hypocycloid", "hypocycloid_dual"),
        ("quadric_param", "quadric_param_dual"),
        ("diagram_i", "diagram_di"),
        ("diagram_i3", "diagram_di3"),
    ];
    for (input, output) in pairs {
        let i = load(&format!("{input}.ideal"));
        let expected = load(&format!("{output}.ideal"));
        let d = dual(&engine, &i.ideal()).unwrap();
        assert!(d.is_homogeneous());
        assert!(engine.ideal_equal(&d, &expected.ideal()).unwrap(), "{input}: {d}");
    }
}

#[test]
fn biduals_of_reflexive_examples() {
    let engine = Engine::default();
    for name in ["steiner", "neil", "quadric_param", "point_p1", "intersection", "hypocycloid"] {
        let report = double_dual_check(&engine, &load(&format!("{name}.ideal")).ideal()).unwrap();
        assert!(report.equal, "{name}: bidual {}", report.bidual);
    }
}

#[test]
fn reduction_of_the_double_line_dualizes_to_a_reduced_point() {
    let engine = Engine::default();
    let d = dual(&engine, &load("diagram_radical.ideal").ideal()).unwrap();
    let ring = d.ring().clone();
    let point = dualis::Ideal::new(&ring, vec![parse_polynomial("x-y", &ring).unwrap()]).unwrap();
    assert!(engine.ideal_equal(&d, &point).unwrap(), "{d}");
    // the non-reduced line keeps its double structure through both duals
    let report = double_dual_check(&engine, &load("diagram_i.ideal").ideal()).unwrap();
    assert!(report.equal);
    assert!(!engine.ideal_equal(&d, &load("diagram_di.ideal").ideal()).unwrap());
}

#[test]
fn diagram_inclusion_a_holds_on_the_corpus() {
    let engine = Engine::default();
    for (name, doc) in all() {
        let ideal = doc.ideal();
        if !ideal.is_homogeneous() || name.starts_with("klein") {
            continue;
        }
        let report = check_diagram(&engine, &ideal, None).unwrap();
        assert!(report.dual_in_own_radical, "{name}");
    }
}
