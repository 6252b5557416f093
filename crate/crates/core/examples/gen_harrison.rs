//! Regenerates `fixtures/harrison-d2.json`.

fn main() {
    let l = dmc_core::lie::harrison::harrison_fixture(2, 2).expect("harrison fixture");
    println!("{}", l.to_json());
}
