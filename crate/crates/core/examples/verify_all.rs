//! Run every registered identity on one seeded scenario and print JSON.

use thetacirc::harness::{verify_identity, Scenario, VerifyConfig};
use thetacirc::{IdentityId, SamplePlan, WindingOrder};

fn main() -> thetacirc::Result<()> {
    let plan = SamplePlan::default().with_count(4).with_seed(7);
    let cfg = VerifyConfig::default().with_plan(plan);
    let sc = Scenario::draw(&mut plan.sampler_for(0), WindingOrder::new(2)?, 3);

    let mut reports = Vec::new();
    for id in IdentityId::ALL {
        let r = verify_identity(id, &sc, &cfg)?;
        eprintln!("{:<22} {:?}", id.name(), r.verdict);
        reports.push(r);
    }
    println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    Ok(())
}
