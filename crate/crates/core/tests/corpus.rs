use chromroots::census::census;
use chromroots::chromatic::chromatic_polynomial;
use chromroots::experiments::corpus::{corpus_all_real_census, Corpus};
use chromroots::experiments::sweep::certificate_signs;
use chromroots::roots::{count_real_roots, find_roots, AllReal};
use std::path::PathBuf;

fn corpus(name: &str) -> Corpus {
    Corpus::open(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)).unwrap()
}

#[test]
fn small_connected_corpora() {
    for (name, all_real, total) in [
        ("connected4.g6", 5, 6),
        ("connected5.g6", 15, 21),
        ("connected6.g6", 58, 112),
    ] {
        let r = corpus_all_real_census(&corpus(name));
        assert_eq!((r.all_real, r.total, r.disconnected), (all_real, total, 0), "{name}");
        assert!(r.errors.is_empty());
    }
}

#[test]
fn all_graph_corpora_include_disconnected_graphs() {
    for (name, total) in [("all5.g6", 34), ("all6.g6", 156)] {
        let r = corpus_all_real_census(&corpus(name));
        assert_eq!(r.total, total);
        assert!(r.disconnected > 0);
        assert!(r.all_real < r.total);
    }
}

// A negative discriminant must never be issued for a graph whose chromatic
// roots are all real.
#[test]
fn certificates_are_sound_on_every_small_graph() {
    let mut certified = 0;
    for n in 4..=8 {
        for (line, g) in corpus(&format!("connected{n}.g6")).graphs {
            let (quad, quartic) = certificate_signs(&census(&g), n).unwrap();
            if quad < 0 || quartic < 0 {
                certified += 1;
                let p = chromatic_polynomial(&g).unwrap();
                assert!(!count_real_roots(&p).unwrap().all_real(), "order {n} line {line}");
            }
        }
    }
    assert!(certified > 1000);
}

// Exact and floating realness agree wherever the numeric result converged.
#[test]
fn numeric_realness_agrees_with_sturm() {
    for (_, g) in corpus("connected7.g6").graphs {
        let p = chromatic_polynomial(&g).unwrap();
        let roots = find_roots(&p).unwrap();
        assert!(roots.converged);
        assert_eq!(roots.all_real, AllReal::from(count_real_roots(&p).unwrap().all_real()));
    }
}
