//! CSV correlation tables.
//!
//! PACF rows are `tau1,tau2,re,im,abs` with wrapped nonnegative shifts;
//! ACCF rows are `tau,re,im,abs` with signed shifts in increasing order.

use num_complex::Complex64;
use std::io::Write;

use crate::correlate::{AccfVector, PacfGrid};
use crate::error::Result;

fn cells(v: Complex64) -> [String; 3] {
    [v.re.to_string(), v.im.to_string(), v.norm().to_string()]
}

pub fn write_pacf_csv<W: Write>(grid: &PacfGrid, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["tau1", "tau2", "re", "im", "abs"])?;
    for (t1, t2, v) in grid.iter() {
        let [re, im, abs] = cells(v);
        w.write_record([t1.to_string(), t2.to_string(), re, im, abs])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_accf_csv<W: Write>(vector: &AccfVector, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["tau", "re", "im", "abs"])?;
    for (tau, v) in vector.iter() {
        let [re, im, abs] = cells(v);
        w.write_record([tau.to_string(), re, im, abs])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::code_from_signs;
    use crate::correlate::{aacf, pacf2d};

    #[test]
    fn accf_table() {
        let mut buf = Vec::new();
        write_accf_csv(&aacf(&code_from_signs("+++").unwrap()), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "tau,re,im,abs\n-2,1,0,1\n-1,2,0,2\n0,3,0,3\n1,2,0,2\n2,1,0,1\n"
        );
    }

    #[test]
    fn pacf_table_rows() {
        let mut buf = Vec::new();
        write_pacf_csv(&pacf2d(&code_from_signs("++/+-").unwrap()), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[1], "0,0,4,0,4");
    }
}
