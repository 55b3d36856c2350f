use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructor::Configuration;
use crate::error::{Error, Result};
use crate::geometry::{Sphere, SurfaceCircle};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    dim: usize,
    radius: f64,
    circles: BTreeMap<String, CircleDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircleDoc {
    center: Vec<f64>,
    r: f64,
}

/// `{dim, radius, circles: {name: {center, r}}}`. Floats are written in
/// their shortest round-tripping form.
pub fn export_json(conf: &Configuration) -> String {
    let doc = Document {
        dim: conf.dim(),
        radius: conf.sphere.radius(),
        circles: conf
            .circles
            .iter()
            .map(|(k, c)| {
                (
                    k.clone(),
                    CircleDoc {
                        center: c.center.coords().to_vec(),
                        r: c.radius,
                    },
                )
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("configuration serializes")
}

/// Parses and validates a document written by [`export_json`].
pub fn import_json(text: &str) -> Result<Configuration> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let sphere = Sphere::new(doc.dim, doc.radius)?;
    let mut conf = Configuration::new(sphere);
    for (name, c) in doc.circles {
        let center = sphere.point(c.center)?;
        let circle: SurfaceCircle = sphere.circle(center, c.r)?;
        conf.circles.insert(name, circle);
    }
    Ok(conf)
}
