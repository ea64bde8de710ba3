//! Built-in example curves, stored in the curve file format. The last entry
//! is a deliberately singular model used as a negative control: analyzing
//! it must fail with a singularity witness.

pub const ENTRIES: &[(&str, &str)] = &[
    (
        "hermitian-q2",
        "# Hermitian curve for q = 2: y^2 + y = x^3 over F_4\n\
         label = hermitian-q2\n\
         p = 2\n\
         n = 1\n\
         term 0 2 [1]\n\
         term 0 1 [1]\n\
         term 3 0 [1]\n",
    ),
    (
        "hermitian-q3",
        "# Hermitian curve for q = 3: y^3 + y = x^4 over F_9\n\
         label = hermitian-q3\n\
         p = 3\n\
         n = 1\n\
         term 0 3 [1]\n\
         term 0 1 [1]\n\
         term 4 0 [-1]\n",
    ),
    (
        "hermitian-q4",
        "# Hermitian curve for q = 4: y^4 + y = x^5 over F_16\n\
         label = hermitian-q4\n\
         p = 2\n\
         n = 2\n\
         term 0 4 [1]\n\
         term 0 1 [1]\n\
         term 5 0 [1]\n",
    ),
    (
        "conic-f9",
        "# smooth conic y = x^2 over F_9: maximal with genus 0\n\
         label = conic-f9\n\
         p = 3\n\
         n = 1\n\
         term 0 1 [1]\n\
         term 2 0 [-1]\n",
    ),
    (
        "elliptic-ordinary-f9",
        "# elliptic curve y^2 = x^3 - x + 1 over F_9: 7 points, not maximal\n\
         label = elliptic-ordinary-f9\n\
         p = 3\n\
         n = 1\n\
         term 0 2 [1]\n\
         term 3 0 [-1]\n\
         term 1 0 [1]\n\
         term 0 0 [-1]\n",
    ),
    (
        "cuspidal-cubic",
        "# cuspidal cubic y^2 = x^3: singular at the origin, rejected on input\n\
         label = cuspidal-cubic\n\
         p = 3\n\
         n = 1\n\
         term 0 2 [1]\n\
         term 3 0 [-1]\n",
    ),
];

pub fn get(label: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(l, _)| *l == label).map(|(_, t)| *t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::CurveFile;

    #[test]
    fn all_entries_parse_and_labels_match() {
        for (label, text) in ENTRIES {
            let cf = CurveFile::parse(text).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert_eq!(cf.label.as_deref(), Some(*label));
        }
    }

    #[test]
    fn every_entry_but_the_negative_control_builds() {
        for (label, text) in ENTRIES {
            let cf = CurveFile::parse(text).unwrap();
            let built = cf.to_curve();
            if *label == "cuspidal-cubic" {
                assert!(built.is_err(), "the negative control must be rejected");
            } else {
                let c = built.unwrap_or_else(|e| panic!("{label}: {e}"));
                assert_eq!(c.label(), Some(*label));
            }
        }
    }

    #[test]
    fn catalog_point_counts() {
        let expect = [
            ("hermitian-q2", 9u64),
            ("hermitian-q3", 28),
            ("hermitian-q4", 65),
            ("conic-f9", 10),
            ("elliptic-ordinary-f9", 7),
        ];
        for (label, pts) in expect {
            let c = CurveFile::parse(get(label).unwrap()).unwrap().to_curve().unwrap();
            assert_eq!(c.point_count(), pts, "{label}");
        }
    }
}
