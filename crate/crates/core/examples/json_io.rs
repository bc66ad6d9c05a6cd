//! Reading and writing matrix documents.

use core_inverse::inverses::core_inverse;
use core_inverse::json::{AnyMatrix, MatrixDoc};

fn main() {
    let text = r#"{"ring":"gaussian_rational","rows":2,"cols":2,"entries":[["1","1/2i"],["0","0"]]}"#;
    let m = AnyMatrix::parse(text).unwrap();
    assert_eq!(m.to_doc().to_json(), text);
    println!("parsed {} matrix of rank {}", m.ring(), m.rank().unwrap());
    if let AnyMatrix::Gaussian(a) = &m {
        let x = core_inverse(a).unwrap();
        println!("{}", MatrixDoc::from_matrix(&x).to_json());
    }

    let dual = r#"{"ring":"dual_gaussian","rows":1,"cols":2,"entries":[["1+(2)e","(1/2i)e"]]}"#;
    let d = AnyMatrix::parse(dual).unwrap();
    println!("{} (rank: {})", d.to_doc().to_json(), d.rank().unwrap_err());

    let bad = r#"{"ring":"gaussian_rational","rows":1,"cols":1,"entries":[["1/0"]]}"#;
    println!("{}", AnyMatrix::parse(bad).unwrap_err());
}
