use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::InvalidInput => 2,
        }
    }
}

/// What a subcommand produced. `text` is printed verbatim when present
/// (csv and aligned tables); otherwise the JSON document is printed.
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub text: Option<String>,
    pub diagnostic: Option<String>,
}

impl CommandResult {
    pub fn ok(payload: impl Serialize) -> Self {
        Self::with_status(Status::Ok, payload)
    }

    pub fn with_status(status: Status, payload: impl Serialize) -> Self {
        CommandResult {
            status,
            payload: serde_json::to_value(payload).expect("payload serializes"),
            text: None,
            diagnostic: None,
        }
    }

    pub fn text(text: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Value::Null,
            text: Some(text),
            diagnostic: None,
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Self::invalid_with(message, Value::Null)
    }

    pub fn invalid_with(message: impl Into<String>, extra: Value) -> Self {
        let message = message.into();
        let mut payload = serde_json::json!({ "error": message });
        if let Value::Object(fields) = extra {
            payload.as_object_mut().unwrap().extend(fields);
        }
        CommandResult {
            status: Status::InvalidInput,
            payload,
            text: None,
            diagnostic: Some(message),
        }
    }

    /// Status first, then the payload fields in their own order.
    pub fn render(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        let mut doc = serde_json::Map::new();
        doc.insert("status".into(), serde_json::to_value(self.status).unwrap());
        if let Value::Object(fields) = &self.payload {
            for (k, v) in fields {
                doc.insert(k.clone(), v.clone());
            }
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(doc)).unwrap();
        out.push('\n');
        out
    }
}
