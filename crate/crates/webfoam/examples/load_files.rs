// Read the bundled JSON files and summarize them.

use std::error::Error;
use std::path::Path;

use webfoam::tait::tait_count;
use webfoam::web_core::{parse_diagram, parse_web};

pub fn main() -> Result<(), Box<dyn Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.sort();
    for path in paths {
        let text = std::fs::read_to_string(&path)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("?");
        let web = match parse_diagram(&text) {
            Ok(d) => {
                print!("{name:18} diagram  crossings {:2}  ", d.crossing_count());
                d.underlying_web()
            }
            Err(_) => {
                print!("{name:18} web                    ");
                parse_web(&text)?
            }
        };
        println!(
            "vertices {:2}  tait {}",
            web.vertex_count(),
            tait_count(&web)
        );
    }
    Ok(())
}
