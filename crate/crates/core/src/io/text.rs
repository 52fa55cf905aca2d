//! `+`/`-` text format for binary codes: one code per block, blocks separated
//! by blank lines, `#` starts a comment line.

use crate::code::{code_from_signs, Code};
use crate::error::{Error, Result};

/// Parse every block of a sign-text document.
pub fn parse_sign_blocks(text: &str) -> Result<Vec<Code>> {
    let mut codes = Vec::new();
    let mut block = String::new();
    let mut block_start = 1;
    let flush = |block: &mut String, start: usize, codes: &mut Vec<Code>| -> Result<()> {
        if block.trim().is_empty() {
            block.clear();
            return Ok(());
        }
        let code = code_from_signs(block).map_err(|e| match e {
            Error::Parse { line, message } => Error::Parse {
                line: start + line - 1,
                message,
            },
            other => other,
        })?;
        codes.push(code);
        block.clear();
        Ok(())
    };
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            flush(&mut block, block_start, &mut codes)?;
            continue;
        }
        if block.is_empty() {
            block_start = idx + 1;
        }
        block.push_str(trimmed);
        block.push('\n');
    }
    flush(&mut block, block_start, &mut codes)?;
    if codes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "document contains no codes".into(),
        });
    }
    if let Some(c) = codes.iter().find(|c| c.dims() != codes[0].dims()) {
        return Err(Error::DimensionMismatch {
            expected: codes[0].dims(),
            found: c.dims(),
        });
    }
    Ok(codes)
}

/// Render binary codes as sign blocks separated by blank lines.
pub fn emit_sign_blocks<'a>(codes: impl IntoIterator<Item = &'a Code>) -> Result<String> {
    let blocks = codes
        .into_iter()
        .map(|c| {
            c.to_sign_text().ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "sign text needs a binary alphabet, code uses {}",
                    c.alphabet()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(blocks.join("\n"))
}
