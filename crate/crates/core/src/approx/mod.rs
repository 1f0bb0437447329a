//! Approximation constants, the Perron formula and brute-force scans.

pub mod delta;
pub mod ray;
pub mod scan;

pub use delta::{delta_sq, delta_sq_rational, delta_sq_stream, hat_vee, height, pairing_exact, perron_delta, PerronTerms};
pub use ray::{eisenstein_pairs, is_eisenstein_pair, pair_scan, pair_scan_on, point_ray_distance, ray_distance, PairScan, RayTarget};
pub use scan::{
    best_approx_scan, best_approx_scan_on, best_approx_scan_with, boundary_points, delta_liminf_estimate, minimizers_on,
    ApproxRecord, BoundaryTag, Endpoint, LiminfEstimate,
};
