use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lieyam_core::cochain::CochainMap;
use lieyam_core::io::{write_cocycle, Document};
use lieyam_core::linalg::{parse_rational, rat};
use lieyam_core::{
    adjoint_representation, rank, semidirect_product, Complex, ComplexKind, ExtensionCocycle,
    MdlyCochain, RatMatrix, TruncatedDeformation,
};
use lieyam_core::verify_deformation;

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lieyam-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn lieyam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieyam")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> usize {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("{key} missing in {text}"))
        .parse()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bundled_examples_validate() {
    for name in ["lyg-2dim.json", "lyg-3dim.json"] {
        let o = lieyam(&["validate", path(&example(name))]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        let o = lieyam(&["validate", path(&example(name)), "--json"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["ok"], true);
    }
}

#[test]
fn antisymmetry_conflict_is_an_input_error() {
    let o = lieyam(&["validate", path(&fixture("conflict.json"))]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("antisymmetry conflict at (1,2)"), "{err}");
}

#[test]
fn violations_exit_with_one() {
    let o = lieyam(&["validate", path(&fixture("bad-operator.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("operator-binary"));
}

#[test]
fn malformed_input_exits_with_two() {
    let p = scratch("broken.json", "{ \"dim\": 2, ");
    assert_eq!(lieyam(&["validate", path(&p)]).status.code(), Some(2));
    assert_eq!(lieyam(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(lieyam(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn cohomology_report_matches_the_library() {
    let doc = Document::read(&example("lyg-2dim.json")).unwrap();
    let a = doc.mdly().unwrap();
    let r = adjoint_representation(&a);
    let h = Complex::new(&a, &r).unwrap().cohomology(ComplexKind::Mdly, 2, false).unwrap();
    let file = example("lyg-2dim.json");
    let args = ["cohomology", path(&file), "--degree", "2", "--adjoint"];
    let first = lieyam(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert_eq!(field(&text, "dimZ"), h.dim_z);
    assert_eq!(field(&text, "dimB"), h.dim_b);
    assert_eq!(field(&text, "dimH"), h.dim_h);
    assert_eq!(stdout(&lieyam(&args)), text);
}

#[test]
fn abelian_degree_one_is_everything() {
    let o = lieyam(&["cohomology", path(&fixture("abelian-1.json")), "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "dimH"), 1);
    assert_eq!(field(&text, "dimC"), 1);
}

#[test]
fn unsupported_degree_exits_with_two() {
    let o = lieyam(&["cohomology", path(&example("lyg-2dim.json")), "--degree", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn representatives_are_printed_as_cochains() {
    let o = lieyam(&[
        "cohomology",
        path(&example("lyg-2dim.json")),
        "--degree",
        "2",
        "--representatives",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reps = v["representatives"].as_array().unwrap();
    assert_eq!(reps.len() as u64, v["dim_h"].as_u64().unwrap());
    for rep in reps {
        let doc: lieyam_core::io::CochainDoc = serde_json::from_value(rep.clone()).unwrap();
        let c = lieyam_core::io::read_cochain(&doc, 2, 2).unwrap();
        let a = Document::read(&example("lyg-2dim.json")).unwrap().mdly().unwrap();
        let r = adjoint_representation(&a);
        assert!(Complex::new(&a, &r).unwrap().is_cocycle(&c).unwrap());
    }
}

#[test]
fn enumerated_space_contains_the_family() {
    let o = lieyam(&["enumerate-operators", path(&example("lyg-2dim.json")), "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let parse = |line: &str| -> Vec<_> {
        let rows: Vec<Vec<String>> = serde_json::from_str(line).unwrap();
        rows.iter().flatten().map(|s| parse_rational(s).unwrap()).collect()
    };
    let particular = parse(text.lines().find_map(|l| l.strip_prefix("particular = ")).unwrap());
    let dirs: Vec<Vec<_>> = text
        .lines()
        .filter_map(|l| l.split_once(" = ").filter(|(k, _)| k.starts_with("direction")))
        .map(|(_, v)| parse(v))
        .collect();
    for (k, k1) in [(2, 3), (-1, 5), (0, 0)] {
        let m = [rat(k), rat(k1), rat(0), rat(-1)];
        let rhs: Vec<_> = m.iter().zip(&particular).map(|(a, b)| a - b).collect();
        let base = RatMatrix::from_columns(4, &dirs).unwrap();
        let mut with = dirs.clone();
        with.push(rhs);
        let aug = RatMatrix::from_columns(4, &with).unwrap();
        assert_eq!(rank(&base), rank(&aug), "k = {k}, k1 = {k1}");
    }
}

#[test]
fn extend_with_zero_cocycle_is_the_semidirect_product() {
    let o = lieyam(&[
        "extend",
        path(&example("lyg-2dim.json")),
        "--cocycle",
        path(&fixture("zero-cocycle.json")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let a = Document::read(&example("lyg-2dim.json")).unwrap().mdly().unwrap();
    let expected = Document::from_mdly(&semidirect_product(&a, &adjoint_representation(&a)).unwrap());
    assert_eq!(Document::parse(&stdout(&o)).unwrap(), expected);
}

#[test]
fn extend_rejects_non_cocycles() {
    let mut c = ExtensionCocycle::zero(2, 2);
    c.chi[(1, 0)] = rat(1);
    let p = scratch("bad-cocycle.json", &serde_json::to_string(&write_cocycle(&c)).unwrap());
    let o = lieyam(&["extend", path(&example("lyg-2dim.json")), "--cocycle", path(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a 2-cocycle"));
}

#[test]
fn classify_identical_and_shifted_cocycles() {
    let o = lieyam(&[
        "classify",
        path(&example("lyg-2dim.json")),
        "--cocycle1",
        path(&fixture("zero-cocycle.json")),
        "--cocycle2",
        path(&fixture("zero-cocycle.json")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equivalent, witness omega = 0"));

    let a = Document::read(&example("lyg-2dim.json")).unwrap().mdly().unwrap();
    let r = adjoint_representation(&a);
    let cx = Complex::new(&a, &r).unwrap();
    let d1 = cx.matrix(CochainMap::Partial, 1).unwrap();
    let w = vec![rat(1), rat(2), rat(0), rat(-1)];
    let bw = MdlyCochain::from_coords(2, 2, 2, &d1.mul_vec(&w).unwrap()).unwrap();
    let c = ExtensionCocycle::from_cochain(&bw).unwrap();
    let p = scratch("coboundary.json", &serde_json::to_string(&write_cocycle(&c)).unwrap());
    let o = lieyam(&[
        "classify",
        path(&example("lyg-2dim.json")),
        "--cocycle1",
        path(&p),
        "--cocycle2",
        path(&fixture("zero-cocycle.json")),
    ]);
    assert!(stdout(&o).starts_with("equivalent"), "{}", stdout(&o));

    let h = cx.cohomology(ComplexKind::Mdly, 2, true).unwrap();
    let rep = MdlyCochain::from_coords(2, 2, 2, &h.representatives.unwrap()[0]).unwrap();
    let c = ExtensionCocycle::from_cochain(&rep).unwrap();
    let p = scratch("class.json", &serde_json::to_string(&write_cocycle(&c)).unwrap());
    let o = lieyam(&[
        "classify",
        path(&example("lyg-2dim.json")),
        "--cocycle1",
        path(&p),
        "--cocycle2",
        path(&fixture("zero-cocycle.json")),
    ]);
    assert_eq!(stdout(&o).trim(), "inequivalent");
}

#[test]
fn deform_check_on_a_coboundary_deformation() {
    let mut doc = Document::read(&example("lyg-2dim.json")).unwrap();
    let a = doc.mdly().unwrap();
    let r = adjoint_representation(&a);
    let cx = Complex::new(&a, &r).unwrap();
    let d1 = cx.matrix(CochainMap::Partial, 1).unwrap();
    let bw = MdlyCochain::from_coords(2, 2, 2, &d1.mul_vec(&[rat(0), rat(1), rat(1), rat(0)]).unwrap()).unwrap();
    let (f, g) = bw.top().to_tensors().unwrap();
    let phi = bw.shadow().unwrap().to_matrix().unwrap();
    doc.deformation = Some(vec![(f.clone(), g.clone(), phi.clone())]);
    let p = scratch("deform-ok.json", &doc.to_json());
    let o = lieyam(&["deform-check", path(&p)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("infinitesimal is a 2-cocycle: true"));

    let bad = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut m = phi.clone();
            m[(i, j)] += rat(1);
            m
        })
        .find(|m| {
            let d = TruncatedDeformation::new(a.clone(), vec![f.clone()], vec![g.clone()], vec![m.clone()]).unwrap();
            !verify_deformation(&d).all_pass()
        })
        .expect("some elementary shift breaks the operator conditions");
    doc.deformation = Some(vec![(f, g, bad)]);
    let p = scratch("deform-bad.json", &doc.to_json());
    let o = lieyam(&["deform-check", path(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("operator-"), "{}", stdout(&o));
}

#[test]
fn rigidity_never_claims_non_rigidity() {
    let o = lieyam(&["rigidity", path(&example("lyg-2dim.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("inconclusive: dimH2 = "));
}

#[test]
fn bundled_documents_round_trip() {
    for name in ["lyg-2dim.json", "lyg-3dim.json"] {
        let doc = Document::read(&example(name)).unwrap();
        assert_eq!(Document::parse(&doc.to_json()).unwrap(), doc);
    }
}
