use serde_json::{json, Map, Value};

/// One named assertion inside a report.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass }
    }
}

/// A matrix payload that `--csv` can project.
#[derive(Clone, Debug)]
pub struct Table {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn from_ints<T: ToString>(labels: &[String], rows: &[Vec<T>]) -> Self {
        Table {
            row_labels: labels.to_vec(),
            col_labels: labels.to_vec(),
            rows: rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> =
            std::iter::once(String::new()).chain(self.col_labels.iter().map(|l| quote(l))).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            let cells: Vec<String> = std::iter::once(quote(label)).chain(row.iter().map(|c| quote(c))).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// What a command hands back before it is wrapped into a report.
pub struct Outcome {
    pub result: Value,
    pub checks: Vec<Check>,
    pub table: Option<Table>,
}

impl Outcome {
    pub fn new(result: Value, checks: Vec<Check>) -> Self {
        Outcome { result, checks, table: None }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn into_report(self, command: &[String], wall_time_ms: Option<u128>) -> Value {
        let pass = self.pass();
        let checks: Vec<Value> = self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass})).collect();
        let mut obj = Map::new();
        obj.insert("command".into(), json!(command));
        obj.insert("result".into(), self.result);
        obj.insert("checks".into(), Value::Array(checks));
        obj.insert("pass".into(), Value::Bool(pass));
        if let Some(ms) = wall_time_ms {
            obj.insert("wall_time_ms".into(), json!(ms));
        }
        Value::Object(obj)
    }
}

/// Structural validation of a report object.
pub fn validate(report: &Value) -> Result<(), String> {
    let obj = report.as_object().ok_or("report is not an object")?;
    for key in obj.keys() {
        if !["command", "result", "checks", "pass", "wall_time_ms"].contains(&key.as_str()) {
            return Err(format!("unexpected key {key:?}"));
        }
    }
    let command = obj.get("command").and_then(Value::as_array).ok_or("command must be an array")?;
    if command.is_empty() || !command.iter().all(Value::is_string) {
        return Err("command must be a nonempty array of strings".into());
    }
    if !obj.get("result").is_some_and(Value::is_object) {
        return Err("result must be an object".into());
    }
    let checks = obj.get("checks").and_then(Value::as_array).ok_or("checks must be an array")?;
    if checks.is_empty() {
        return Err("a report needs at least one check".into());
    }
    let mut all = true;
    for c in checks {
        let c = c.as_object().ok_or("check must be an object")?;
        if c.len() != 2 || !c.get("name").is_some_and(Value::is_string) {
            return Err("check must be {name, pass}".into());
        }
        all &= c.get("pass").and_then(Value::as_bool).ok_or("check pass must be a boolean")?;
    }
    let pass = obj.get("pass").and_then(Value::as_bool).ok_or("pass must be a boolean")?;
    if pass != all {
        return Err("pass disagrees with checks".into());
    }
    if let Some(t) = obj.get("wall_time_ms") {
        if !t.is_u64() {
            return Err("wall_time_ms must be a nonnegative integer".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_report() {
        let o = Outcome::new(json!({"x": 1}), vec![Check::new("a", true), Check::new("b", false)]);
        let r = o.into_report(&["dims".into()], None);
        assert_eq!(r["pass"], json!(false));
        validate(&r).unwrap();
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(validate(&json!([])).is_err());
        assert!(validate(&json!({"command": ["x"], "result": {}, "checks": [], "pass": true})).is_err());
        let lying = json!({"command": ["x"], "result": {}, "checks": [{"name": "a", "pass": false}], "pass": true});
        assert!(validate(&lying).is_err());
    }

    #[test]
    fn csv_quotes() {
        let t = Table { row_labels: vec!["{1,2}".into()], col_labels: vec!["a".into()], rows: vec![vec!["1".into()]] };
        assert_eq!(t.to_csv(), ",a\n\"{1,2}\",1\n");
    }
}
