use ncx_core::gen::{random_complex, random_staircase_ses, ComplexShape};
use ncx_core::io::{parse_document, to_canonical_string, Document};
use ncx_core::nhomog::build_a_rn;
use ncx_core::qdga::qpoly_example;
use ncx_core::Field;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field(cyclotomic: bool, big_n: usize) -> Field {
    if cyclotomic {
        Field::cyclotomic(big_n).unwrap()
    } else {
        Field::prime_with_root(61, big_n).unwrap()
    }
}

fn assert_round_trip(doc: &Document) {
    let text = to_canonical_string(&doc.to_json());
    let back = parse_document(&text).expect("canonical text parses");
    assert_eq!(back.kind(), doc.kind());
    assert_eq!(to_canonical_string(&back.to_json()), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn complexes_round_trip(seed in any::<u64>(), big_n in 2usize..=5, cyc in any::<bool>()) {
        let f = field(cyc, big_n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&f, ComplexShape::default(), &mut rng);
        let doc = Document::Complex(c.clone());
        assert_round_trip(&doc);
        match parse_document(&to_canonical_string(&doc.to_json())).unwrap() {
            Document::Complex(back) => prop_assert_eq!(back, c),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }

    #[test]
    fn sequences_round_trip(seed in any::<u64>(), big_n in 2usize..=5, cyc in any::<bool>()) {
        let f = field(cyc, big_n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_staircase_ses(&f, ComplexShape::default(), &mut rng);
        assert_round_trip(&Document::Ses(s));
    }
}

#[test]
fn algebras_round_trip() {
    for big_n in 2..=4 {
        for cyc in [false, true] {
            let f = field(cyc, big_n);
            assert_round_trip(&Document::Algebra(qpoly_example(&f, 2 * big_n).unwrap()));
        }
    }
    let f = Field::cyclotomic(3).unwrap();
    let a = build_a_rn(&f, 1, 3, 3, 2).unwrap();
    assert_round_trip(&Document::Algebra(a.to_qdga().unwrap()));
}

#[test]
fn twisted_cyclotomic_field_survives() {
    let f = Field::cyclotomic_with_power(5, 2).unwrap();
    let c = ncx_core::ncomplex::NComplex::staircase(&f, -2, 4);
    let text = to_canonical_string(&Document::Complex(c).to_json());
    assert!(text.contains("\"q_power\": 2"));
    let back = parse_document(&text).unwrap();
    assert_eq!(back.field().q_power(), Some(2));
}
