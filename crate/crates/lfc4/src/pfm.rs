//! PFM (portable float map) reader and writer, plus light-field directory I/O.
//!
//! Header is `PF` (3-channel) or `Pf` (grayscale), then `width height`, then
//! a scale whose sign encodes endianness (negative = little endian). Sample
//! rows are stored bottom-up in the file; in memory images are top-down.
//! Files hold 32-bit floats; samples widen to `f64` on load, so a save/load
//! round trip of `f32`-representable data is bit-exact.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::image::{HdrImage, LightField4D};
use crate::{Error, Result};

/// Reads one whitespace-delimited ASCII token.
fn read_token(reader: &mut impl Read, path: &Path) -> Result<String> {
    let mut token = Vec::new();
    let mut byte = [0u8; 1];
    loop {
        let n = reader.read(&mut byte).map_err(|e| Error::io(path, e))?;
        if n == 0 {
            if token.is_empty() {
                return Err(Error::pfm(path, "unexpected end of header"));
            }
            break;
        }
        if byte[0].is_ascii_whitespace() {
            if token.is_empty() {
                continue;
            }
            break;
        }
        token.push(byte[0]);
        if token.len() > 32 {
            return Err(Error::pfm(path, "header token too long"));
        }
    }
    String::from_utf8(token).map_err(|_| Error::pfm(path, "non-ASCII header token"))
}

/// Loads a PFM file. Rejects malformed headers, truncated payloads, and
/// non-finite samples.
pub fn load_pfm(path: impl AsRef<Path>) -> Result<HdrImage> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = BufReader::new(file);

    let magic = read_token(&mut reader, path)?;
    let channels = match magic.as_str() {
        "PF" => 3,
        "Pf" => 1,
        other => return Err(Error::pfm(path, format!("bad magic {other:?}"))),
    };
    let width: usize = read_token(&mut reader, path)?
        .parse()
        .map_err(|_| Error::pfm(path, "invalid width"))?;
    let height: usize = read_token(&mut reader, path)?
        .parse()
        .map_err(|_| Error::pfm(path, "invalid height"))?;
    let scale: f32 = read_token(&mut reader, path)?
        .parse()
        .map_err(|_| Error::pfm(path, "invalid scale"))?;
    if width == 0 || height == 0 {
        return Err(Error::pfm(path, "zero image dimension"));
    }
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::pfm(path, "scale must be finite and nonzero"));
    }
    let little_endian = scale < 0.0;

    let count = width * height * channels;
    let mut payload = vec![0u8; count * 4];
    reader
        .read_exact(&mut payload)
        .map_err(|_| Error::pfm(path, "truncated payload"))?;

    // File rows run bottom-up; flip to top-down while decoding.
    let mut data = vec![0.0f64; count];
    let row_samples = width * channels;
    for file_row in 0..height {
        let mem_row = height - 1 - file_row;
        for i in 0..row_samples {
            let off = (file_row * row_samples + i) * 4;
            let bytes = [payload[off], payload[off + 1], payload[off + 2], payload[off + 3]];
            let v = if little_endian {
                f32::from_le_bytes(bytes)
            } else {
                f32::from_be_bytes(bytes)
            };
            if !v.is_finite() {
                return Err(Error::pfm(
                    path,
                    format!("non-finite sample {v} at row {mem_row}, offset {i}"),
                ));
            }
            data[mem_row * row_samples + i] = v as f64;
        }
    }
    HdrImage::new(width, height, channels, data)
}

/// Writes a PFM file (little-endian, scale -1.0). Samples are narrowed to
/// `f32`; anything outside `f32` range becomes infinite and is rejected.
pub fn save_pfm(img: &HdrImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut writer = BufWriter::new(file);

    let magic = if img.channels() == 3 { "PF" } else { "Pf" };
    write!(writer, "{magic}\n{} {}\n-1.0\n", img.width(), img.height())
        .map_err(|e| Error::io(path, e))?;

    let row_samples = img.width() * img.channels();
    let data = img.data();
    for mem_row in (0..img.height()).rev() {
        for i in 0..row_samples {
            let v = data[mem_row * row_samples + i] as f32;
            if !v.is_finite() {
                return Err(Error::pfm(path, format!("sample {v} not representable as f32")));
            }
            writer
                .write_all(&v.to_le_bytes())
                .map_err(|e| Error::io(path, e))?;
        }
    }
    writer.flush().map_err(|e| Error::io(path, e))
}

/// Expands a `{s}`/`{t}` path template for one view index pair.
pub fn view_path(template: &str, s: usize, t: usize) -> PathBuf {
    PathBuf::from(
        template
            .replace("{s}", &s.to_string())
            .replace("{t}", &t.to_string()),
    )
}

/// Loads an S x T light field from PFM files named by a path template
/// containing `{s}` and `{t}` placeholders. Index offsets select a window
/// out of denser captures.
pub fn load_light_field(
    template: &str,
    angular_rows: usize,
    angular_cols: usize,
    s_start: usize,
    t_start: usize,
) -> Result<LightField4D> {
    let mut views = Vec::with_capacity(angular_rows * angular_cols);
    for s in 0..angular_rows {
        for t in 0..angular_cols {
            let path = view_path(template, s_start + s, t_start + t);
            if !path.exists() {
                return Err(Error::Invalid(format!(
                    "missing view ({s}, {t}): no file {}",
                    path.display()
                )));
            }
            views.push(load_pfm(&path)?);
        }
    }
    LightField4D::new(angular_rows, angular_cols, views)
}

/// Saves every view of a light field through the same `{s}`/`{t}` template.
pub fn save_light_field(lf: &LightField4D, template: &str) -> Result<()> {
    for s in 0..lf.angular_rows() {
        for t in 0..lf.angular_cols() {
            save_pfm(lf.view(s, t), view_path(template, s, t))?;
        }
    }
    Ok(())
}
