//! Line-oriented stream processing that leaves the whitespace skeleton of
//! the input byte-identical: only word runs are rewritten.

/// Splits a line into alternating whitespace / word runs, in order.
/// `is_word` is true for runs without whitespace.
pub fn split_runs(line: &str) -> Vec<(bool, &str)> {
    let mut runs = Vec::new();
    let mut start = 0;
    let mut current_is_word: Option<bool> = None;
    for (i, c) in line.char_indices() {
        let is_word = !c.is_whitespace();
        match current_is_word {
            Some(kind) if kind == is_word => {}
            Some(_) => {
                runs.push((current_is_word.unwrap(), &line[start..i]));
                start = i;
                current_is_word = Some(is_word);
            }
            None => current_is_word = Some(is_word),
        }
    }
    if let Some(kind) = current_is_word {
        runs.push((kind, &line[start..]));
    }
    runs
}

/// Rebuilds a line from its runs with every word run replaced by the next
/// element of `replacements` (in order).
pub fn rebuild<'a, I>(runs: &[(bool, &str)], mut replacements: I) -> String
where
    I: Iterator<Item = &'a str>,
{
    let mut out = String::new();
    for &(is_word, text) in runs {
        if is_word {
            out.push_str(replacements.next().expect("one replacement per word"));
        } else {
            out.push_str(text);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_preserve_skeleton() {
        let line = "  ab\tcd  \n";
        let runs = split_runs(line);
        assert_eq!(
            runs,
            vec![
                (false, "  "),
                (true, "ab"),
                (false, "\t"),
                (true, "cd"),
                (false, "  \n"),
            ]
        );
        let rebuilt = rebuild(&runs, ["AB", "CD"].into_iter());
        assert_eq!(rebuilt, "  AB\tCD  \n");
    }

    #[test]
    fn empty_and_whitespace_only_lines() {
        assert_eq!(split_runs(""), vec![]);
        assert_eq!(split_runs(" \t"), vec![(false, " \t")]);
    }
}
