//! Serde adapters shared across the crate.

/// Matrices serialized as a list of row arrays, the natural shape for JSON
/// artifacts and TOML design files.
pub(crate) mod matrix_rows {
    use nalgebra::DMatrix;
    use serde::de::Error as DeError;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S>(m: &DMatrix<f64>, s: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        let mut seq = s.serialize_seq(Some(m.nrows()))?;
        for i in 0..m.nrows() {
            let row: Vec<f64> = m.row(i).iter().copied().collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D>(d: D) -> Result<DMatrix<f64>, D::Error>
    where
        D: Deserializer<'de>,
    {
        let rows: Vec<Vec<f64>> = Vec::deserialize(d)?;
        if rows.is_empty() {
            return Err(D::Error::custom("matrix needs at least one row"));
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(D::Error::custom("matrix rows must not be empty"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(D::Error::custom(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
        }
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        Ok(DMatrix::from_row_slice(rows.len(), ncols, &flat))
    }
}

#[cfg(test)]
mod tests {
    use nalgebra::DMatrix;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    struct Holder {
        #[serde(with = "super::matrix_rows")]
        m: DMatrix<f64>,
    }

    #[test]
    fn round_trips_through_json() {
        let h = Holder {
            m: DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]),
        };
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(text, r#"{"m":[[1.0,2.0,3.0],[4.0,5.0,6.0]]}"#);
        let back: Holder = serde_json::from_str(&text).unwrap();
        assert_eq!(back.m, h.m);
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = serde_json::from_str::<Holder>(r#"{"m":[[1.0,2.0],[3.0]]}"#);
        assert!(err.is_err());
    }
}
