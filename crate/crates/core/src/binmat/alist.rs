//! alist text format.
//!
//! ```text
//! n m
//! max_col_weight max_row_weight
//! <n column weights>
//! <m row weights>
//! <n lines: 1-based row indices of each column>
//! <m lines: 1-based column indices of each row>
//! ```
//!
//! Zero entries in index lists are padding and are skipped on read, so files
//! written by tools that pad irregular matrices load unchanged.

use std::fmt::Write as _;

use super::{BinMatError, BitMatrix};

pub fn alist_write(m: &BitMatrix) -> String {
    let col_w = m.column_weights();
    let row_w = m.row_weights();
    let mut out = String::new();
    let join = |xs: &mut dyn Iterator<Item = usize>| {
        xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "{} {}", m.cols(), m.rows()).unwrap();
    writeln!(
        out,
        "{} {}",
        col_w.iter().max().copied().unwrap_or(0),
        row_w.iter().max().copied().unwrap_or(0)
    )
    .unwrap();
    writeln!(out, "{}", join(&mut col_w.iter().copied())).unwrap();
    writeln!(out, "{}", join(&mut row_w.iter().copied())).unwrap();
    for j in 0..m.cols() {
        let s = m.column_support(j).rows;
        writeln!(out, "{}", join(&mut s.into_iter().map(|i| i + 1))).unwrap();
    }
    for i in 0..m.rows() {
        writeln!(
            out,
            "{}",
            join(&mut m.row_support(i).into_iter().map(|j| j + 1))
        )
        .unwrap();
    }
    out
}

struct Lines<'a> {
    inner: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>), BinMatError> {
        let line_no = self.pos + 1;
        let Some(line) = self.inner.get(self.pos) else {
            return Err(BinMatError::Parse {
                line: line_no,
                message: format!("unexpected end of input, expected {what}"),
            });
        };
        self.pos += 1;
        let nums = line
            .split_ascii_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| BinMatError::Parse {
                    line: line_no,
                    message: format!("invalid integer {tok:?} in {what}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((line_no, nums))
    }

    fn expect_len(&mut self, what: &str, len: usize) -> Result<(usize, Vec<usize>), BinMatError> {
        let (line, nums) = self.next_numbers(what)?;
        if nums.len() != len {
            return Err(BinMatError::Parse {
                line,
                message: format!("expected {len} values for {what}, found {}", nums.len()),
            });
        }
        Ok((line, nums))
    }
}

pub fn alist_read(text: &str) -> Result<BitMatrix, BinMatError> {
    let mut lines = Lines {
        inner: text.lines().collect(),
        pos: 0,
    };
    let (_, dims) = lines.expect_len("dimensions", 2)?;
    let (n, m) = (dims[0], dims[1]);
    let (max_line, maxes) = lines.expect_len("maximum weights", 2)?;
    let (_, col_w) = lines.expect_len("column weights", n)?;
    let (_, row_w) = lines.expect_len("row weights", m)?;

    let mut ones = Vec::new();
    let mut col_lists = Vec::with_capacity(n);
    for (j, &w) in col_w.iter().enumerate() {
        let (line, raw) = lines.next_numbers("column index list")?;
        let mut idx: Vec<usize> = raw.into_iter().filter(|&x| x != 0).collect();
        if idx.len() != w {
            return Err(BinMatError::DimensionMismatch(format!(
                "line {line}: column {} declares weight {w} but lists {} rows",
                j + 1,
                idx.len()
            )));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i > m) {
            return Err(BinMatError::Parse {
                line,
                message: format!("row index {bad} exceeds row count {m}"),
            });
        }
        idx.sort_unstable();
        if idx.windows(2).any(|p| p[0] == p[1]) {
            return Err(BinMatError::Parse {
                line,
                message: "repeated row index".into(),
            });
        }
        ones.extend(idx.iter().map(|&i| (i - 1, j)));
        col_lists.push(idx);
    }

    let matrix = BitMatrix::from_entries(m, n, ones);

    for (i, &w) in row_w.iter().enumerate() {
        let (line, raw) = lines.next_numbers("row index list")?;
        let mut idx: Vec<usize> = raw.into_iter().filter(|&x| x != 0).collect();
        idx.sort_unstable();
        let expected: Vec<usize> = matrix.row_support(i).into_iter().map(|j| j + 1).collect();
        if idx.len() != w || idx != expected {
            return Err(BinMatError::DimensionMismatch(format!(
                "line {line}: row {} (weight {w}) disagrees with the column lists",
                i + 1
            )));
        }
    }

    let actual_max_col = col_w.iter().max().copied().unwrap_or(0);
    let actual_max_row = row_w.iter().max().copied().unwrap_or(0);
    if maxes != [actual_max_col, actual_max_row] {
        return Err(BinMatError::DimensionMismatch(format!(
            "line {max_line}: declared maximum weights {} {} but lists give {actual_max_col} {actual_max_row}",
            maxes[0], maxes[1]
        )));
    }

    if let Some(extra) = lines.inner[lines.pos..]
        .iter()
        .position(|l| !l.trim().is_empty())
    {
        return Err(BinMatError::Parse {
            line: lines.pos + extra + 1,
            message: "trailing content after row lists".into(),
        });
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let m = BitMatrix::from_rows(&[[1u8]]);
        let text = alist_write(&m);
        assert_eq!(text, "1 1\n1 1\n1\n1\n1\n1\n");
        assert_eq!(alist_read(&text).unwrap(), m);
        assert_eq!(alist_read(text.trim_end()).unwrap(), m);
    }

    #[test]
    fn zero_padding_is_tolerated() {
        let text = "2 2\n2 2\n1 2\n2 1\n1 0\n1 2\n1 2\n2 0\n";
        let m = alist_read(text).unwrap();
        assert_eq!(m, BitMatrix::from_rows(&[[1u8, 1], [0, 1]]));
    }

    #[test]
    fn weight_mismatch_reports_line() {
        let text = "1 1\n1 1\n1\n1\n\n1\n";
        match alist_read(text) {
            Err(BinMatError::DimensionMismatch(msg)) => assert!(msg.contains("line 5"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_token_reports_line() {
        let text = "1 1\n1 x\n";
        assert_eq!(
            alist_read(text),
            Err(BinMatError::Parse {
                line: 2,
                message: "invalid integer \"x\" in maximum weights".into()
            })
        );
    }

    #[test]
    fn inconsistent_row_list() {
        let text = "2 1\n1 1\n1 0\n1\n1\n\n2\n";
        assert!(matches!(
            alist_read(text),
            Err(BinMatError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn truncated_input() {
        assert!(matches!(
            alist_read("3 2\n1 1\n"),
            Err(BinMatError::Parse { line: 3, .. })
        ));
    }
}
