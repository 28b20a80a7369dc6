//! Values printed in the reference tables that the exact oracles must hit.

use wvg_core::data::{builtin_ec, builtin_fl_ny_wy};
use wvg_core::oracle::{conv_payoffs, wta_exact_payoffs, ConvOptions};
use wvg_core::welfare::{gp_profile, GpScheme};
use wvg_core::{MarginDistribution, Profile};

#[test]
fn three_state_example() {
    let d = MarginDistribution::uniform();
    let g = builtin_fl_ny_wy();
    let opts = ConvOptions::with_resolution(0.01);
    for v in wta_exact_payoffs(&g, &d).unwrap().mean {
        assert!((v - 0.25).abs() < 1e-12);
    }
    let pr = conv_payoffs(&g, &Profile::pr(3), &d, opts).unwrap().mean;
    for (v, want) in pr.iter().zip([0.332, 0.332, 0.034]) {
        assert!((v - want).abs() < 5e-4, "{v} vs {want}");
    }
    let eq = gp_profile(&g, &GpScheme::Equalizing).unwrap();
    for v in conv_payoffs(&g, &eq, &d, opts).unwrap().mean {
        assert!((v - 0.271).abs() < 5e-4, "{v}");
    }
}

#[test]
fn electoral_college_winner_take_all() {
    let d = MarginDistribution::uniform();
    let g = builtin_ec();
    let pay = wta_exact_payoffs(&g, &d).unwrap().mean;
    for (w, want) in [
        (3.0, 0.0113),
        (10.0, 0.0378),
        (29.0, 0.1120),
        (55.0, 0.2356),
    ] {
        let i = (0..g.n()).find(|&i| g.weight(i) == w).unwrap();
        assert!((pay[i] - want).abs() < 1e-4, "EV {w}: {}", pay[i]);
    }
}
