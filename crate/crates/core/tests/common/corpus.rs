//! The golden corpus and an oracle that recomputes every printed value
//! through direct calls against the instance API. Shared by the corpus tests
//! and the acceptance suite.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use traced_core::bordism::{self, PointSet, RBordMorphism};
use traced_core::dsl::{self, eval::Line};
use traced_core::dynamic::{describe, AnyMorphism, AnyObject, AnyTriple, Instance};
use traced_core::vect::{q_frac, q_int, RatMatrix, Q};

/// `(stem, text)` for every `.diag` file in `dir`, sorted by name.
pub fn corpus(dir: &Path) -> Vec<(String, String)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "diag"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect()
}

/// Direct API calls mirroring one program.
struct Oracle {
    inst: Instance,
}

impl Oracle {
    fn new(spec: &str) -> Self {
        Oracle { inst: Instance::parse(spec).unwrap() }
    }

    fn rows(rows: &[&[Q]]) -> RatMatrix {
        RatMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn lit(&self, rows: &[&[Q]]) -> AnyMorphism {
        self.inst.matrix_literal(Self::rows(rows)).unwrap()
    }

    fn map(&self, dom: &AnyObject, cod: &AnyObject, rows: &[&[Q]]) -> AnyMorphism {
        self.inst.matrix_morphism(dom, cod, Self::rows(rows)).unwrap()
    }

    fn sup(&self, even: usize, odd: usize) -> AnyObject {
        self.inst.super_object(even, odd).unwrap()
    }

    fn graded(&self, dims: &[(i64, usize)]) -> AnyObject {
        let dims: BTreeMap<i64, usize> = dims.iter().copied().collect();
        self.inst.graded_object(&dims).unwrap()
    }

    fn bord(&self, sigma: RBordMorphism) -> AnyMorphism {
        self.inst.bordism(sigma).unwrap()
    }

    fn show(&self, m: &AnyMorphism) -> String {
        describe(&self.inst, m)
    }

    fn compose(&self, g: &AnyMorphism, f: &AnyMorphism) -> AnyMorphism {
        self.inst.compose(g, f).unwrap()
    }

    fn tensor(&self, f: &AnyMorphism, g: &AnyMorphism) -> AnyMorphism {
        self.inst.tensor(f, g).unwrap()
    }

    fn trace(&self, f: &AnyMorphism) -> AnyMorphism {
        self.inst.trace(f).unwrap()
    }

    fn canonical(&self, f: &AnyMorphism) -> AnyTriple {
        self.inst.canonical(f).unwrap()
    }

    fn tr_hat(&self, t: &AnyTriple) -> AnyMorphism {
        self.inst.tr_hat(t).unwrap()
    }

    fn pairing(&self, t: &AnyTriple, g: &AnyMorphism) -> AnyMorphism {
        self.inst.trace_pairing(t, g).unwrap()
    }

    fn loop_of(&self, x: &AnyObject) -> AnyMorphism {
        let i = &self.inst;
        let dx = i.dual(x).unwrap();
        let sw = i.compose(&i.switching(x, &dx).unwrap(), &i.coev(x).unwrap()).unwrap();
        i.compose(&i.ev(x).unwrap(), &sw).unwrap()
    }

    fn cut(&self, f: &AnyMorphism, q: Q) -> AnyTriple {
        self.inst.cut(f, &q).unwrap()
    }
}

fn n(v: i64) -> Q {
    q_int(v)
}

fn interval(a: &str, b: &str, len: i64) -> RBordMorphism {
    bordism::interval(a, b, q_int(len)).unwrap()
}

fn loops(lengths: &[Q]) -> RBordMorphism {
    RBordMorphism::new(PointSet::empty(), PointSet::empty(), vec![], lengths.to_vec()).unwrap()
}

/// The values program `name` prints, computed without the DSL.
pub fn oracle(name: &str) -> Vec<String> {
    match name {
        "01_dimension" => {
            let o = Oracle::new("finvect");
            let x = o.inst.plain_object(3).unwrap();
            vec![o.show(&o.loop_of(&x))]
        }
        "02_trace_matrix" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            vec![o.show(&o.trace(&f)), o.show(&o.tr_hat(&o.canonical(&f)))]
        }
        "03_composition_order" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(1)], &[n(0), n(1)]]);
            let g = o.lit(&[&[n(2), n(0)], &[n(0), n(3)]]);
            vec![o.show(&o.compose(&g, &f)), o.show(&o.compose(&f, &g))]
        }
        "04_tensor" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            let g = o.lit(&[&[n(0), n(1)], &[n(1), n(0)]]);
            let fg = o.tensor(&f, &g);
            vec![o.show(&fg), o.show(&o.trace(&fg))]
        }
        "05_pairing_symmetry" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(0), n(1)], &[n(3), n(1)]]);
            let g = o.lit(&[&[n(2), n(0), n(1)], &[n(1), n(1), n(0)]]);
            vec![o.show(&o.pairing(&o.canonical(&f), &g)), o.show(&o.pairing(&o.canonical(&g), &f))]
        }
        "06_additivity" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            let g = o.lit(&[&[n(5), n(0)], &[n(1), n(-1)]]);
            vec![o.show(&o.trace(&o.inst.add(&f, &g).unwrap()))]
        }
        "07_negation" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[q_frac(1, 2), n(2)], &[n(3), n(-4)]]);
            let nf = o.inst.negate(&f).unwrap();
            vec![o.show(&nf), o.show(&o.trace(&nf))]
        }
        "08_switching" => {
            let o = Oracle::new("finvect");
            let (x, y) = (o.inst.plain_object(2).unwrap(), o.inst.plain_object(3).unwrap());
            let sxy = o.inst.switching(&x, &y).unwrap();
            let round = o.compose(&o.inst.switching(&y, &x).unwrap(), &sxy);
            vec![o.show(&o.trace(&round)), o.show(&sxy)]
        }
        "09_zigzag" => {
            let o = Oracle::new("finvect");
            let x = o.inst.plain_object(2).unwrap();
            vec![o.show(&o.inst.identity(&x).unwrap())]
        }
        "10_triple_literal" => {
            let o = Oracle::new("finvect");
            let x = o.inst.plain_object(2).unwrap();
            let t = o
                .inst
                .triple(&o.inst.dual(&x).unwrap(), &o.inst.coev(&x).unwrap(), &o.inst.ev(&x).unwrap())
                .unwrap();
            vec![o.show(&o.inst.psi(&t).unwrap()), o.show(&o.tr_hat(&t))]
        }
        "11_pre_post" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            let g = o.lit(&[&[n(0), n(1)], &[n(1), n(1)]]);
            vec![o.show(&o.compose(&f, &g)), o.show(&o.compose(&g, &f))]
        }
        "12_thickener_ends" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(0), n(1)], &[n(3), n(1)]]);
            let t = o.inst.thickener(&f).unwrap();
            vec![t.z().to_string(), t.dom().to_string(), t.cod().to_string()]
        }
        "13_sum_of_triples" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            let g = o.lit(&[&[n(0), n(1)], &[n(1), n(1)]]);
            let sum = o.inst.add(&f, &g).unwrap();
            let z = o.inst.direct_sum(&o.inst.plain_object(2).unwrap(), &o.inst.plain_object(2).unwrap()).unwrap();
            vec![z.to_string(), o.show(&sum), o.show(&o.trace(&sum))]
        }
        "14_tensor_of_triples" => {
            let o = Oracle::new("finvect");
            let f = o.lit(&[&[n(1), n(2)], &[n(3), n(4)]]);
            let g = o.lit(&[&[n(2)]]);
            vec![o.show(&o.compose(&o.trace(&f), &o.trace(&g)))]
        }
        "15_scalars" => vec!["6".into(), "5/6".into(), "3".into()],
        "16_superdimension" => {
            let o = Oracle::new("supervect");
            let x = o.sup(2, 3);
            vec![o.show(&o.trace(&o.inst.identity(&x).unwrap())), o.show(&o.loop_of(&x))]
        }
        "17_odd_line" => {
            let o = Oracle::new("supervect");
            let x = o.sup(0, 1);
            let s = o.inst.switching(&x, &x).unwrap();
            vec![o.show(&s), o.show(&o.trace(&s))]
        }
        "18_super_trace" => {
            let o = Oracle::new("supervect");
            let x = o.sup(1, 1);
            let f = o.map(&x, &x, &[&[n(2), n(0)], &[n(0), n(5)]]);
            // even diagonal minus odd diagonal
            assert_eq!(o.show(&o.trace(&f)), "-3");
            vec![o.show(&o.trace(&f)), o.show(&o.tr_hat(&o.canonical(&f)))]
        }
        "19_super_pairing" => {
            let o = Oracle::new("supervect");
            let (x, y) = (o.sup(1, 1), o.sup(2, 1));
            let f = o.map(&x, &y, &[&[n(1), n(0)], &[n(2), n(0)], &[n(0), n(3)]]);
            let g = o.map(&y, &x, &[&[n(1), n(1), n(0)], &[n(0), n(0), n(2)]]);
            vec![o.show(&o.trace(&o.compose(&g, &f))), o.show(&o.trace(&o.compose(&f, &g)))]
        }
        "20_super_multiplicativity" => {
            let o = Oracle::new("supervect");
            let f = o.map(&o.sup(1, 1), &o.sup(1, 1), &[&[n(1), n(0)], &[n(0), n(2)]]);
            let g = o.map(&o.sup(0, 1), &o.sup(0, 1), &[&[n(3)]]);
            vec![o.show(&o.trace(&o.tensor(&f, &g)))]
        }
        "21_super_switch_square" => {
            let o = Oracle::new("supervect");
            let x = o.sup(1, 1);
            vec![o.show(&o.trace(&o.inst.switching(&x, &x).unwrap()))]
        }
        "22_super_canonical" => {
            let o = Oracle::new("supervect");
            let x = o.sup(2, 1);
            let f = o.map(&x, &x, &[&[n(1), n(2), n(0)], &[n(3), n(4), n(0)], &[n(0), n(0), n(7)]]);
            vec![o.inst.dual(&x).unwrap().to_string(), o.show(&o.trace(&f))]
        }
        "23_super_sum" => {
            let o = Oracle::new("supervect");
            let x = o.sup(1, 1);
            let f = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(4)]]);
            let t = o.inst.add_triples(&o.canonical(&f), &o.canonical(&f)).unwrap();
            let doubled = o.trace(&o.inst.add(&f, &f).unwrap());
            assert!(o.inst.mor_equal(&o.tr_hat(&t), &doubled));
            vec![o.show(&doubled), t.z().to_string()]
        }
        "24_super_slide" => {
            let o = Oracle::new("supervect");
            let x = o.sup(1, 1);
            let f = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(2)]]);
            let g = o.map(&x, &x, &[&[n(3), n(0)], &[n(0), n(5)]]);
            vec![o.show(&o.compose(&f, &g))]
        }
        "25_super_zigzag" => {
            let o = Oracle::new("supervect");
            vec![o.inst.dual(&o.sup(1, 2)).unwrap().to_string()]
        }
        "26_super_twist" => {
            let o = Oracle::new("supervect");
            vec![o.show(&o.inst.identity(&o.sup(1, 1)).unwrap())]
        }
        "27_super_negation" => {
            let o = Oracle::new("supervect");
            let x = o.sup(1, 1);
            let f = o.map(&x, &x, &[&[n(2), n(0)], &[n(0), n(3)]]);
            vec![o.show(&o.trace(&o.inst.negate(&f).unwrap())), "0".into()]
        }
        "28_graded_line" => {
            let o = Oracle::new("graded(q=2)");
            vec![o.show(&o.loop_of(&o.graded(&[(1, 1)])))]
        }
        "29_graded_braiding" => {
            // q^{1·1} on the degree-2 line and its inverse
            let o = Oracle::new("graded(q=2)");
            let xx = o.graded(&[(2, 1)]);
            vec![o.show(&o.map(&xx, &xx, &[&[n(2)]])), o.show(&o.map(&xx, &xx, &[&[q_frac(1, 2)]]))]
        }
        "30_graded_twist" => {
            // q^{m²} per degree
            let o = Oracle::new("graded(q=2)");
            let x = o.graded(&[(-1, 1), (2, 1)]);
            vec![o.show(&o.map(&x, &x, &[&[n(2), n(0)], &[n(0), n(16)]]))]
        }
        "31_graded_trace" => {
            let o = Oracle::new("graded(q=2)");
            let x = o.graded(&[(0, 1), (1, 1)]);
            let f = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(3)]]);
            vec![o.show(&o.trace(&f)), o.show(&o.tr_hat(&o.canonical(&f)))]
        }
        "32_graded_q3" => {
            let o = Oracle::new("graded(q=3)");
            let (x, y) = (o.graded(&[(1, 1)]), o.graded(&[(2, 1)]));
            vec![o.show(&o.inst.braiding(&x, &y).unwrap()), o.show(&o.inst.twist(&y).unwrap())]
        }
        "33_graded_canonical" => {
            let o = Oracle::new("graded(q=2)");
            let x = o.graded(&[(-1, 1), (1, 2)]);
            let f = o.map(&x, &x, &[&[n(2), n(0), n(0)], &[n(0), n(1), n(1)], &[n(0), n(0), n(1)]]);
            vec![o.inst.dual(&x).unwrap().to_string(), o.show(&o.trace(&f))]
        }
        "34_graded_pairing" => {
            let o = Oracle::new("graded(q=2)");
            let (x, y) = (o.graded(&[(0, 1), (1, 1)]), o.graded(&[(0, 2), (1, 1)]));
            let f = o.map(&x, &y, &[&[n(1), n(0)], &[n(2), n(0)], &[n(0), n(3)]]);
            let g = o.map(&y, &x, &[&[n(1), n(1), n(0)], &[n(0), n(0), n(2)]]);
            vec![o.show(&o.trace(&o.compose(&g, &f))), o.show(&o.trace(&o.compose(&f, &g)))]
        }
        "35_graded_multiplicativity" => {
            let o = Oracle::new("graded(q=2)");
            let f = o.map(&o.graded(&[(1, 1)]), &o.graded(&[(1, 1)]), &[&[n(3)]]);
            let x = o.graded(&[(0, 1), (2, 1)]);
            let g = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(2)]]);
            vec![o.show(&o.compose(&o.trace(&f), &o.trace(&g)))]
        }
        "36_graded_tensor_triples" => {
            let o = Oracle::new("graded(q=2)");
            let f = o.map(&o.graded(&[(1, 1)]), &o.graded(&[(1, 1)]), &[&[n(3)]]);
            let x = o.graded(&[(0, 1), (2, 1)]);
            let g = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(2)]]);
            let t = o.inst.tensor_triples(&o.canonical(&f), &o.canonical(&g)).unwrap();
            vec![o.show(&o.trace(&o.tensor(&f, &g))), t.z().to_string()]
        }
        "37_graded_hexagon" => {
            // q^{1·(2-1)}
            let o = Oracle::new("graded(q=2)");
            let x = o.graded(&[(2, 1)]);
            vec![o.show(&o.map(&x, &x, &[&[n(2)]]))]
        }
        "38_graded_slide" => {
            let o = Oracle::new("graded(q=2)");
            let x = o.graded(&[(0, 1), (1, 1)]);
            let f = o.map(&x, &x, &[&[n(1), n(0)], &[n(0), n(2)]]);
            let g = o.map(&x, &x, &[&[n(5), n(0)], &[n(0), n(7)]]);
            vec![o.show(&o.pairing(&o.canonical(&f), &g))]
        }
        "39_circle_from_cut" => {
            let o = Oracle::new("rbord1");
            let sigma = interval("x", "x", 4);
            let glued = bordism::glue_trace(&sigma).unwrap();
            assert_eq!(glued, bordism::circle(q_int(4)).unwrap());
            vec![o.show(&o.bord(glued))]
        }
        "40_isometry" => {
            let o = Oracle::new("rbord1");
            let s = bordism::isometry(PointSet::new(["a", "b"]), PointSet::new(["b", "a"]), &[1, 0]).unwrap();
            let id_c = o.inst.identity(&o.inst.points(&["c".to_string()]).unwrap()).unwrap();
            let s = o.bord(s);
            vec![o.show(&s), o.show(&o.tensor(&s, &id_c))]
        }
        "41_interval_composition" => {
            let o = Oracle::new("rbord1");
            vec![o.show(&o.bord(interval("x", "z", 5)))]
        }
        "42_cup_cap" => {
            let o = Oracle::new("rbord1");
            let cap = o.bord(bordism::cap("a", "b", q_int(1)).unwrap());
            let cup = o.bord(bordism::cup("a", "b", q_int(2)).unwrap());
            let closed = o.compose(&cup, &cap);
            assert_eq!(closed.as_bordism().unwrap(), &bordism::circle(q_int(3)).unwrap());
            vec![o.show(&closed)]
        }
        "43_thickener" => {
            let o = Oracle::new("rbord1");
            let t = o.inst.thickener(&o.bord(interval("x", "x", 3))).unwrap();
            vec![t.z().to_string(), o.show(&o.inst.psi(&t).unwrap())]
        }
        "44_two_cuts" => {
            let o = Oracle::new("rbord1");
            vec![o.show(&o.bord(bordism::circle(q_int(6)).unwrap()))]
        }
        "45_two_strands" => {
            let o = Oracle::new("rbord1");
            let sigma = RBordMorphism::new(
                PointSet::new(["x", "y"]),
                PointSet::new(["x", "y"]),
                vec![
                    bordism::Arc::new(bordism::Endpoint::In(0), bordism::Endpoint::Out(1), q_int(1)),
                    bordism::Arc::new(bordism::Endpoint::In(1), bordism::Endpoint::Out(0), q_int(2)),
                ],
                vec![],
            )
            .unwrap();
            vec![o.show(&o.bord(bordism::glue_trace(&sigma).unwrap()))]
        }
        "46_pre_post_bordism" => {
            let o = Oracle::new("rbord1");
            let sum = o.bord(interval("x", "x", 7));
            vec![o.show(&sum), o.show(&sum)]
        }
        "47_tensor_bordisms" => {
            let o = Oracle::new("rbord1");
            let tau = RBordMorphism::new(
                PointSet::new(["a", "b"]),
                PointSet::empty(),
                vec![bordism::Arc::new(bordism::Endpoint::In(0), bordism::Endpoint::In(1), q_int(1))],
                vec![q_int(3)],
            )
            .unwrap();
            vec![o.show(&o.tensor(&o.bord(interval("x", "y", 2)), &o.bord(tau)))]
        }
        "48_pairing_bordism" => {
            let o = Oracle::new("rbord1");
            let (sigma, tau) = (o.bord(interval("x", "y", 2)), o.bord(interval("y", "x", 3)));
            let a = o.pairing(&o.cut(&sigma, q_frac(1, 2)), &tau);
            let b = o.trace(&o.compose(&tau, &sigma));
            assert!(o.inst.mor_equal(&a, &b));
            vec![o.show(&b), o.show(&o.bord(bordism::circle(q_int(5)).unwrap()))]
        }
        "49_empty" => {
            let o = Oracle::new("rbord1");
            let e = o.bord(loops(&[]));
            vec![o.show(&e), o.show(&o.inst.identity(&o.inst.unit()).unwrap())]
        }
        "50_loops" => {
            let o = Oracle::new("rbord1");
            vec![o.show(&o.bord(loops(&[n(2), n(3)]))), o.show(&o.bord(loops(&[q_frac(1, 2), n(1)])))]
        }
        other => panic!("no oracle for {other}"),
    }
}

/// The values a program printed, in order.
pub fn printed(outcome: &dsl::Outcome) -> Vec<String> {
    outcome
        .lines
        .iter()
        .filter_map(|l| match l {
            Line::Print { value, .. } => Some(value.clone()),
            Line::Assert(_) => None,
        })
        .collect()
}
