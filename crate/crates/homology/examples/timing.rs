use std::time::Instant;

use linkconc_core::catalog;
use linkconc_homology::scan::scan_complex;
use linkconc_homology::{gr_homology, homology_betti, Theory};

fn main() {
    env_logger::init();
    for expr in std::env::args().skip(1) {
        let d = catalog::resolve(&expr).unwrap();
        let t = Instant::now();
        let c = scan_complex(&d, Theory::Khovanov).unwrap();
        let kh = homology_betti(&c).unwrap();
        println!("{expr}: n={} Kh total {} in {:?}", d.crossing_count(), kh.total(), t.elapsed());
        print!("{}", kh.render_grid());
        let t = Instant::now();
        let c = scan_complex(&d, Theory::Lee).unwrap();
        let gr = gr_homology(&c);
        println!("Lee gens {} entries {} gr {:?} in {:?}", c.len(), c.entries(), gr.0, t.elapsed());
    }
}
