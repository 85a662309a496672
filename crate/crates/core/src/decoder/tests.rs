use num_bigint::BigUint;

use super::*;
use crate::channel::{all_patterns, delete_at};
use crate::codebook::{enumerate, Budget};
use crate::oracle::brute_decode_deletions;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ternary() -> CodeParams {
    CodeParams::with_u64(3, 2, 8, 23, None).unwrap()
}

fn binary10() -> CodeParams {
    CodeParams::with_u64(2, 2, 10, 62, None).unwrap()
}

fn rx(params: &CodeParams, v: &[Symbol]) -> ReceivedWord {
    ReceivedWord::new(params, v.to_vec()).unwrap()
}

fn indices(trace: &DecodeTrace) -> Vec<u64> {
    trace
        .index_sequence()
        .iter()
        .map(|i| i.iter_u64_digits().next().unwrap_or(0))
        .collect()
}

#[test]
fn recovers_moment_of_worked_examples() {
    let p = ternary();
    assert_eq!(
        recover_moment(&p, &rx(&p, &[1, 2, 2, 0, 2, 1, 2])).unwrap(),
        big(3884)
    );
    let p = binary10();
    assert_eq!(
        recover_moment(&p, &rx(&p, &[1, 1, 0, 1, 0, 1, 0, 1])).unwrap(),
        big(294)
    );
    // M(x') = 1 <= r = 23 takes the second branch.
    let p = ternary();
    assert_eq!(recover_moment(&p, &rx(&p, &[1, 0, 0, 0, 0, 0, 0])).unwrap(), big(23));
}

#[test]
fn recover_moment_preconditions() {
    let p = ternary();
    assert!(recover_moment(&p, &rx(&p, &[0; 8])).is_err());
    assert!(recover_moment(&p, &rx(&p, &[0; 5])).is_err());
    let p1 = CodeParams::with_u64(2, 1, 6, 0, None).unwrap();
    assert_eq!(
        recover_moment(&p1, &rx(&p1, &[0; 5])),
        Err(Error::UseLevenshtein)
    );
}

#[test]
fn single_deletion_worked_example() {
    let p = ternary();
    let out = decode_one(&p, &rx(&p, &[1, 2, 2, 0, 2, 1, 2]), &big(2498)).unwrap();
    assert_eq!(out.codeword.symbols(), &[1, 2, 2, 0, 2, 2, 1, 2]);
    assert_eq!(indices(&out.trace), vec![2498, 706, 378, 0]);
    assert_eq!(
        out.trace.steps().last().unwrap(),
        &TraceStep::Resolve {
            placeholder: 1,
            value: 2,
            position: 6,
            index: big(0)
        }
    );
}

#[test]
fn single_deletion_of_zero_word() {
    let p = CodeParams::with_u64(3, 2, 6, 0, None).unwrap();
    let out = decode_one(&p, &rx(&p, &[0; 5]), &big(0)).unwrap();
    assert_eq!(out.codeword.symbols(), &[0; 6]);
    assert_eq!(out.trace.action_count(), 1);
}

#[test]
fn two_binary_worked_example() {
    let p = binary10();
    let out = decode_two_binary(&p, &rx(&p, &[1, 1, 0, 1, 0, 1, 0, 1]), &big(210)).unwrap();
    assert_eq!(out.codeword.symbols(), &[1, 1, 0, 1, 0, 1, 1, 0, 1, 1]);
    assert_eq!(indices(&out.trace), vec![210, 121, 33, 0]);
    let text = out.trace.to_text();
    assert_eq!(
        text,
        "start c=2 I=210\n\
         shift P=10 sym=1 I=121\n\
         resolve k=2 val=1 P=9 I=33\n\
         shift P=8 sym=0 I=33\n\
         resolve k=1 val=1 P=7 I=0\n"
    );
}

#[test]
fn two_binary_rejects_other_alphabets() {
    let p = ternary();
    assert_eq!(
        decode_two_binary(&p, &rx(&p, &[1, 2, 0, 2, 1, 2]), &big(3380)),
        Err(Error::NotBinary(3))
    );
}

#[test]
fn multi_worked_example() {
    let p = ternary();
    let out = decode_multi(&p, &rx(&p, &[1, 2, 0, 2, 1, 2]), &big(3380)).unwrap();
    assert_eq!(out.codeword.symbols(), &[1, 2, 2, 0, 2, 2, 1, 2]);
    assert_eq!(indices(&out.trace), vec![3380, 932, 484, 156, 18, 0]);
    assert_eq!(
        out.trace.to_text(),
        "start c=2 I=3380\n\
         shift P=8 sym=2 I=932\n\
         shift P=7 sym=1 I=484\n\
         shift P=6 sym=2 I=156\n\
         resolve k=2 val=2 P=5 I=18\n\
         shift P=4 sym=0 I=18\n\
         resolve k=1 val=2 P=3 I=0\n"
    );
}

#[test]
fn dispatching_decoder_end_to_end() {
    let p = ternary();
    let out = decode(&p, &rx(&p, &[1, 2, 2, 0, 2, 1, 2])).unwrap();
    assert_eq!(out.codeword.symbols(), &[1, 2, 2, 0, 2, 2, 1, 2]);
    let p = binary10();
    let out = decode(&p, &rx(&p, &[1, 1, 0, 1, 0, 1, 0, 1])).unwrap();
    assert_eq!(out.codeword.symbols(), &[1, 1, 0, 1, 0, 1, 1, 0, 1, 1]);
}

#[test]
fn full_length_inputs() {
    let p = ternary();
    let x = [1, 2, 2, 0, 2, 2, 1, 2];
    let out = decode(&p, &rx(&p, &x)).unwrap();
    assert_eq!(out.codeword.symbols(), &x);
    assert!(out.trace.steps().is_empty());
    assert_eq!(
        decode(&p, &rx(&p, &[1, 2, 2, 0, 2, 2, 1, 1])),
        Err(Error::CorruptedSameLength)
    );
}

#[test]
fn rejects_out_of_contract_inputs() {
    let p = ternary();
    assert!(matches!(
        decode(&p, &rx(&p, &[1, 2, 2, 0, 2])),
        Err(Error::BeyondCapacity { deletions: 3, capacity: 2 })
    ));
    let p1 = CodeParams::with_u64(2, 1, 6, 0, None).unwrap();
    assert_eq!(decode(&p1, &rx(&p1, &[0; 5])), Err(Error::UseLevenshtein));
    assert!(matches!(
        decode_multi(&p, &rx(&p, &[1, 2, 2, 0, 2, 1, 2]), &big(2498)),
        Err(Error::WrongDeletionCount { .. })
    ));
}

#[test]
fn garbage_is_reported_not_misdecoded() {
    // Words that are not a deletion of any codeword must error out.
    let p = ternary();
    let mut errors = 0;
    let mut ok = 0;
    for code in 0..3usize.pow(7) {
        let mut c = code;
        let word: Vec<Symbol> = (0..7)
            .map(|_| {
                let s = (c % 3) as Symbol;
                c /= 3;
                s
            })
            .collect();
        let preimages = brute_decode_deletions(&p, &word).unwrap();
        match decode(&p, &rx(&p, &word)) {
            Ok(out) => {
                ok += 1;
                assert!(preimages.contains(&out.codeword));
            }
            Err(_) => {
                errors += 1;
                assert!(preimages.is_empty());
            }
        }
    }
    assert!(ok > 0 && errors > 0);
}

fn roundtrip_all(params: &CodeParams) {
    let members: Vec<Codeword> = enumerate(params, Budget::default()).unwrap().collect();
    assert!(!members.is_empty());
    for x in &members {
        for k in 1..=params.d() {
            for pattern in all_patterns(params.n(), k) {
                let received = rx(params, &delete_at(x, &pattern).unwrap());
                let out = decode(params, &received).unwrap_or_else(|e| {
                    panic!("x={x} D={pattern} received={received}: {e}")
                });
                assert_eq!(&out.codeword, x, "D={pattern}");
            }
        }
    }
}

#[test]
fn roundtrip_single_deletions_ternary() {
    let p = ternary();
    for x in enumerate(&p, Budget::default()).unwrap() {
        for pattern in all_patterns(8, 1) {
            let received = rx(&p, &delete_at(&x, &pattern).unwrap());
            assert_eq!(decode(&p, &received).unwrap().codeword, x);
        }
    }
}

#[test]
fn roundtrip_binary_two_deletions() {
    roundtrip_all(&binary10());
}

#[test]
fn roundtrip_ternary_nine() {
    let best = crate::codebook::max_size_search(3, 2, 9, Budget::default(), false).unwrap();
    let p = CodeParams::new(3, 2, 9, best.argmax_residues[0].clone(), None).unwrap();
    roundtrip_all(&p);
}

#[test]
fn multi_agrees_with_two_binary() {
    let p = binary10();
    for x in enumerate(&p, Budget::default()).unwrap() {
        for pattern in all_patterns(10, 2) {
            let received = rx(&p, &delete_at(&x, &pattern).unwrap());
            let a = decode_with(&p, &received, Algorithm::TwoBinary).unwrap();
            let b = decode_with(&p, &received, Algorithm::Multi).unwrap();
            assert_eq!(a.codeword, b.codeword);
        }
    }
}

#[test]
fn trace_replay_and_index_invariant() {
    let p = ternary();
    let x = [1u8, 2, 2, 0, 2, 2, 1, 2];
    let target = crate::word::moment(&p, &x).unwrap();
    for k in 1..=2 {
        for pattern in all_patterns(8, k) {
            let received = delete_at(&x, &pattern).unwrap();
            let out = decode(&p, &rx(&p, &received)).unwrap();
            let states = out.trace.replay(&received).unwrap();
            assert_eq!(states.len(), out.trace.steps().len());
            let last: Vec<Symbol> = states.last().unwrap().iter().map(|s| s.unwrap()).collect();
            assert_eq!(last, x);
            for (state, step) in states.iter().zip(out.trace.steps()) {
                let known: BigUint = state
                    .iter()
                    .enumerate()
                    .filter_map(|(i, s)| s.map(|s| p.weight(i as i64 + 1) * u32::from(s)))
                    .sum();
                assert_eq!(&known + step.index(), target);
            }
        }
    }
}

#[test]
fn trace_text_round_trips() {
    let p = ternary();
    let out = decode(&p, &rx(&p, &[1, 2, 0, 2, 1, 2])).unwrap();
    let parsed: DecodeTrace = out.trace.to_text().parse().unwrap();
    assert_eq!(parsed, out.trace);
}

#[test]
fn index_equal_to_multiple_of_gap_shifts() {
    // At P=7 the index is exactly 2 (w_7 - w_5) and the known symbol is 2.
    let p = ternary();
    let out = decode(&p, &rx(&p, &[0, 2, 2, 0, 2, 2])).unwrap();
    assert_eq!(out.codeword.symbols(), &[0, 2, 2, 0, 0, 0, 2, 2]);
    assert_eq!(
        out.trace.steps()[2],
        TraceStep::Shift {
            position: 7,
            symbol: 2,
            index: big(0)
        }
    );
}
