//! A Lanczos decomposition `A V = V T + beta v e_k'`: orthogonality,
//! recurrence residual and Ritz values against the true spectrum.
//!
//! ```text
//! cargo run --release --example lanczos_basics
//! ```

use netcomm::graph::generate_pref;
use netcomm::krylov::{lanczos, DenseSpectrum};

fn main() -> netcomm::Result<()> {
    let g = generate_pref(300, 2, 4)?;
    let exact = DenseSpectrum::new(&g, 1000)?.eigenvalues_desc();
    let v0 = vec![1.0; g.num_nodes()];
    println!(
        "pref n=300 d=2; exact lambda_1..3 = {:.6} {:.6} {:.6}\n",
        exact[0], exact[1], exact[2]
    );
    println!(
        "{:>3} {:>12} {:>12} {:>10} {:>10}",
        "k", "ritz 1", "ritz 2", "orth", "resid"
    );
    for k in [2, 5, 10, 20, 40] {
        let dec = lanczos(&g, &v0, k)?;
        let ritz = dec.eigen().eigenvalues;
        println!(
            "{k:>3} {:>12.6} {:>12.6} {:>10.1e} {:>10.1e}",
            ritz[k - 1],
            ritz[k - 2],
            dec.orthogonality_error(),
            dec.recurrence_residual(&g)
        );
    }
    Ok(())
}
