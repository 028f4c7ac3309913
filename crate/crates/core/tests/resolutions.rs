use bwbcalc::{
    build_resolution1, build_resolution2, e1_page, normalize, pushforward_fiber, BundleExpr,
    Partition,
};

#[test]
fn pushforward_equals_closed_form() {
    for n in 2..=4 {
        for k in n..=5 {
            for l in 0..=6 {
                let pushed = pushforward_fiber(&build_resolution1(n, k, l).unwrap()).unwrap();
                let closed = build_resolution2(n, k, l).unwrap();
                assert_eq!(pushed.len(), closed.len(), "({n},{k},{l})");
                for (a, b) in pushed.terms.iter().zip(&closed.terms) {
                    assert_eq!(a.index, b.index);
                    assert_eq!(
                        normalize(&a.expr, n).unwrap(),
                        normalize(&b.expr, n).unwrap(),
                        "({n},{k},{l}) term {}",
                        a.index
                    );
                }
            }
        }
    }
}

#[test]
fn term_count_when_l_is_large() {
    for n in 2..=5 {
        for k in n..=7 {
            for l in k..=k + 2 {
                assert_eq!(build_resolution2(n, k, l).unwrap().len(), k - n + 2);
            }
        }
    }
}

#[test]
fn short_complexes_keep_only_the_degree_zero_term() {
    for n in 3..=5 {
        for l in 0..n {
            let pushed = pushforward_fiber(&build_resolution1(n, n + 1, l).unwrap()).unwrap();
            assert_eq!(pushed.len(), 1);
            let page = e1_page(&pushed).unwrap();
            assert!(page.entries.keys().all(|&(_, q)| q == 0));
        }
    }
}

#[test]
fn equal_n_and_k_gives_two_terms() {
    for n in 2..=4 {
        for l in n..=n + 4 {
            let r = build_resolution2(n, n, l).unwrap();
            assert_eq!(r.len(), 2);
            // Λ^n C^n is one-dimensional and Sym^0 of V_a is trivial
            let top = normalize(&r.terms[1].expr, n).unwrap();
            let expected = normalize(
                &BundleExpr::tensor([
                    BundleExpr::det(BundleExpr::q()),
                    BundleExpr::line(2),
                    bwbcalc::resolution::sym_w_ck(l - n, bwbcalc::resolution::w_base(n), n),
                ]),
                n,
            )
            .unwrap();
            assert_eq!(top, expected);
        }
    }
}

#[test]
fn three_four_four_lists_the_expected_terms() {
    let r = build_resolution2(3, 4, 4).unwrap();
    assert_eq!(r.len(), 3);
    // top: det Q ⊗ L^2 ⊗ (Q ⊕ L^2) ⊗ Λ^4 C^4
    let top = normalize(&r.terms[2].expr, 3).unwrap();
    assert_eq!(top.len(), 2);
    assert_eq!(top.get(&Partition::from([2, 1]), 2), 1);
    assert_eq!(top.get(&Partition::from([1, 1]), 4), 1);
    // middle: det Q ⊗ L^2 ⊗ Λ^3 C^4 ⊗ ((Sym^2 C^3 ⊕ Q) ⊗ C^4)
    let mid = normalize(&r.terms[1].expr, 3).unwrap();
    assert_eq!(mid.get(&Partition::from([1, 1]), 2), 4 * 6 * 4);
    assert_eq!(mid.get(&Partition::from([2, 1]), 2), 4 * 4);
    assert_eq!(mid.total_dim(), r.terms[1].expr.rank(3));
}
