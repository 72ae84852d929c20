use std::io::IsTerminal;

use serde_json::Value;

use super::args::Format;

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("json");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = String::new();
            flatten(v, "", &mut out);
            out
        }
    }
}

fn flatten(v: &Value, path: &str, out: &mut String) {
    let key = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(x, &key(k), out)),
        Value::Array(xs) => xs.iter().enumerate().for_each(|(i, x)| flatten(x, &key(&i.to_string()), out)),
        leaf => {
            let text = match leaf {
                Value::String(s) => s.replace('\\', "\\\\").replace('\t', "\\t").replace('\n', "\\n"),
                other => other.to_string(),
            };
            let path = if path.is_empty() { "value" } else { path };
            out.push_str(&format!("{path}\t{text}\n"));
        }
    }
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

pub fn print_error(msg: &str) {
    if color_enabled() {
        eprintln!("\x1b[1;31merror:\x1b[0m {msg}");
    } else {
        eprintln!("error: {msg}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_paths() {
        let v = json!({"a": {"b": [1, "x\ty"]}, "c": true});
        assert_eq!(render(&v, Format::Tsv), "a.b.0\t1\na.b.1\tx\\ty\nc\ttrue\n");
        assert_eq!(render(&json!(4), Format::Tsv), "value\t4\n");
    }
}
