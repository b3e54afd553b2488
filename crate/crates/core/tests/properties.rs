use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use cyclopell::{
    classify, legendre, power_solution, solve_cf, CycInt, GaussianInt, IntPoly,
};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13])
}

fn element(p: u32, bound: i64) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-bound..=bound, (p - 1) as usize)
        .prop_map(move |raw| CycInt::new(p, raw).unwrap())
}

fn triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
    prime().prop_flat_map(|p| (element(p, 50), element(p, 50), element(p, 50)))
}

fn pair_small() -> impl Strategy<Value = (CycInt, CycInt)> {
    prop::sample::select(vec![3u32, 5, 7])
        .prop_flat_map(|p| (element(p, 6), element(p, 6)))
}

proptest! {
    #[test]
    fn ring_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn canonical_round_trip(p in prime(), raw in prop::collection::vec(-100i64..100, 0..40)) {
        let x = CycInt::new(p, raw.clone()).unwrap();
        let again = CycInt::new(p, x.coeffs().iter().cloned()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.coeffs().len(), (p - 1) as usize);
        // Padding with a full period of ones adds 1 + ζ + … + ζ^{p−1} = 0.
        let mut padded = raw;
        padded.resize(raw_len_multiple(padded.len(), p), 0);
        padded.extend(std::iter::repeat_n(1, p as usize));
        prop_assert_eq!(CycInt::new(p, padded).unwrap(), x);
    }

    #[test]
    fn galois_composition((x, _, _) in triple(), j in 1i64..1000, k in 1i64..1000) {
        let p = x.p() as i64;
        prop_assume!(j % p != 0 && k % p != 0);
        prop_assert_eq!(x.galois(k).unwrap().galois(j).unwrap(), x.galois(j * k).unwrap());
    }

    #[test]
    fn norm_is_multiplicative_and_invariant((x, y) in pair_small(), k in 1i64..100) {
        let p = x.p() as i64;
        prop_assume!(k % p != 0);
        let nx = x.norm().unwrap();
        prop_assert_eq!((&x * &y).norm().unwrap(), &nx * y.norm().unwrap());
        prop_assert_eq!(x.galois(k).unwrap().norm().unwrap(), nx);
    }

    #[test]
    fn lambda_divides_x_minus_conjugate((x, _, _) in triple()) {
        let diff = &x - &x.conjugate();
        let q = diff.div_lambda().expect("lambda | x - conj(x)");
        prop_assert_eq!(&q * &CycInt::lambda(x.p()).unwrap(), diff);
    }

    #[test]
    fn primary_exponent_is_unique((x, _, _) in triple()) {
        prop_assume!(x.is_prime_to_lambda());
        let p = x.p();
        let k = x.primary_exponent().unwrap();
        let lambda_sq = CycInt::lambda(p).unwrap().pow(2);
        for j in 0..p {
            let candidate = x.mul_zeta_pow(j as i64);
            let m = BigInt::from(candidate.lambda_digits().a0);
            let rest = &candidate - &CycInt::from_int(p, m).unwrap();
            // Independent route: λ² | (ζ^j·x − m) via two exact divisions.
            let divisible = rest.div_lambda().and_then(|y| y.div_lambda()).is_some();
            prop_assert_eq!(divisible, j == k);
            prop_assert_eq!(candidate.is_primary().unwrap(), j == k);
            if divisible {
                let q = rest.div_lambda().unwrap().div_lambda().unwrap();
                prop_assert_eq!(&q * &lambda_sq, rest);
            }
        }
    }

    #[test]
    fn legendre_is_multiplicative(p in prime(), a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assert_eq!(
            legendre(a * b, p).unwrap(),
            legendre(a, p).unwrap() * legendre(b, p).unwrap()
        );
    }

    #[test]
    fn pell_powers_classify(d in 2u64..200, n in 1u32..8) {
        prop_assume!(cyclopell::arith::is_squarefree(d) && !cyclopell::arith::is_perfect_square(d));
        let fund = solve_cf(d).unwrap();
        let s = power_solution(&fund, n).unwrap();
        prop_assert_eq!(
            s.a() * s.a() - BigInt::from(d) * s.b() * s.b(),
            BigInt::one()
        );
        prop_assert_eq!(classify(&s, &fund).unwrap(), n);
    }

    #[test]
    fn gaussian_division_inverts_product(a in -500i64..500, b in -500i64..500, c in -500i64..500, d in -500i64..500) {
        let x = GaussianInt::new(a, b);
        let y = GaussianInt::new(c, d);
        prop_assume!(y.norm().is_positive());
        prop_assert_eq!((&x * &y).div_exact(&y), Some(x));
    }

    #[test]
    fn poly_evaluations_agree(coeffs in prop::collection::vec(-1000i64..1000, 0..30)) {
        let poly = IntPoly::new(coeffs.clone());
        prop_assert_eq!(poly.eval_at_one(), poly.eval(&BigInt::one()));
        // Direct powers of i as the oracle.
        let mut acc = GaussianInt::default();
        let mut power = GaussianInt::new(1, 0);
        for c in &coeffs {
            acc = &acc + &(&power * &GaussianInt::new(*c, 0));
            power = &power * &GaussianInt::i();
        }
        prop_assert_eq!(poly.eval_at_i(), acc);
    }
}

fn raw_len_multiple(len: usize, p: u32) -> usize {
    len.div_ceil(p as usize) * p as usize
}
