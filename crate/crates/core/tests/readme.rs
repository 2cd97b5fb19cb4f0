//! The README's library example, kept under test verbatim.

use stallings::{intersect, kernel_of_finite_quotient, Alphabet, Permutation, Subgroup, Word};

#[test]
fn readme_example_runs_as_shown() {
    let al = Alphabet::from_chars("ab").unwrap();
    // The kernel of the map onto Z/2 sending both letters to the
    // transposition: the subgroup of all words of even length.
    let swap = Permutation::new(vec![1, 0]).unwrap();
    let kernel = kernel_of_finite_quotient(&al, &[swap.clone(), swap]).unwrap();
    assert_eq!(kernel.finite_index(), Some(2));
    assert_eq!((kernel.rank(), kernel.reduced_rank()), (3, 2));

    let a_line = Subgroup::from_generators(al.clone(), &[Word::parse(&al, "a").unwrap()]);
    let meet = intersect(&kernel, &a_line).unwrap();
    assert_eq!(meet.rank(), 1); // the even powers of a
    assert!(meet.contains(&Word::parse(&al, "aa").unwrap()));
    assert!(!meet.contains(&Word::parse(&al, "a").unwrap()));
}
