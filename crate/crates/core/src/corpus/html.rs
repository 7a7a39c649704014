//! Minimal HTML event scanner.
//!
//! Tutorials in this corpus are simple, mostly well-formed pages, so a
//! linear tag scanner is enough: it emits open/close/text events with byte
//! positions, decodes the common entities, and skips comments, doctypes,
//! and script/style bodies. No DOM is built.

/// One scanner event. `pos` is the byte offset in the source string.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Event {
    Open {
        name: String,
        attrs: Vec<(String, String)>,
        self_closing: bool,
        pos: usize,
    },
    Close {
        name: String,
        pos: usize,
    },
    Text {
        decoded: String,
        pos: usize,
    },
}

pub(crate) fn scan(html: &str) -> Vec<Event> {
    let bytes = html.as_bytes();
    let mut events = Vec::new();
    let mut i = 0;
    let mut text_start = 0;

    while i < bytes.len() {
        if bytes[i] == b'<' {
            let rest = &html[i..];
            if rest.starts_with("<!--") {
                flush_text(html, text_start, i, &mut events);
                i = match html[i..].find("-->") {
                    Some(end) => i + end + 3,
                    None => bytes.len(),
                };
                text_start = i;
                continue;
            }
            if rest.starts_with("<!") || rest.starts_with("<?") {
                flush_text(html, text_start, i, &mut events);
                i = match html[i..].find('>') {
                    Some(end) => i + end + 1,
                    None => bytes.len(),
                };
                text_start = i;
                continue;
            }
            let is_tag_start = bytes
                .get(i + 1)
                .is_some_and(|&b| b.is_ascii_alphabetic() || b == b'/');
            if !is_tag_start {
                i += 1;
                continue;
            }
            flush_text(html, text_start, i, &mut events);
            let (event, next) = parse_tag(html, i);
            let skip_raw = matches!(
                &event,
                Event::Open { name, self_closing: false, .. } if name == "script" || name == "style"
            );
            if skip_raw {
                let name = match &event {
                    Event::Open { name, .. } => name.clone(),
                    _ => unreachable!(),
                };
                let close = format!("</{name}");
                i = match html[next..].to_ascii_lowercase().find(&close) {
                    Some(off) => {
                        let close_pos = next + off;
                        match html[close_pos..].find('>') {
                            Some(gt) => close_pos + gt + 1,
                            None => bytes.len(),
                        }
                    }
                    None => bytes.len(),
                };
            } else {
                events.push(event);
                i = next;
            }
            text_start = i;
        } else {
            i += 1;
        }
    }
    flush_text(html, text_start, bytes.len(), &mut events);
    events
}

fn flush_text(html: &str, start: usize, end: usize, events: &mut Vec<Event>) {
    if start < end {
        let raw = &html[start..end];
        if !raw.is_empty() {
            events.push(Event::Text {
                decoded: decode_entities(raw),
                pos: start,
            });
        }
    }
}

/// Parses the tag starting at `pos` (which points at `<`); returns the event
/// and the offset just past the closing `>`.
fn parse_tag(html: &str, pos: usize) -> (Event, usize) {
    let bytes = html.as_bytes();
    let mut i = pos + 1;
    let closing = bytes.get(i) == Some(&b'/');
    if closing {
        i += 1;
    }
    let name_start = i;
    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'-' || bytes[i] == b':') {
        i += 1;
    }
    let name = html[name_start..i].to_ascii_lowercase();

    let mut attrs = Vec::new();
    let mut self_closing = false;
    while i < bytes.len() && bytes[i] != b'>' {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if bytes[i] == b'/' {
            self_closing = true;
            i += 1;
            continue;
        }
        // attribute name
        let attr_start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'=' && bytes[i] != b'>' && bytes[i] != b'/' {
            i += 1;
        }
        let attr_name = html[attr_start..i].to_ascii_lowercase();
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let mut value = String::new();
        if bytes.get(i) == Some(&b'=') {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            match bytes.get(i) {
                Some(&q) if q == b'"' || q == b'\'' => {
                    i += 1;
                    let val_start = i;
                    while i < bytes.len() && bytes[i] != q {
                        i += 1;
                    }
                    value = decode_entities(&html[val_start..i]);
                    i = (i + 1).min(bytes.len());
                }
                _ => {
                    let val_start = i;
                    while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'>' {
                        i += 1;
                    }
                    value = decode_entities(&html[val_start..i]);
                }
            }
        }
        if !attr_name.is_empty() {
            attrs.push((attr_name, value));
        }
    }
    let end = (i + 1).min(bytes.len());

    let event = if closing {
        Event::Close { name, pos }
    } else {
        Event::Open {
            name,
            attrs,
            self_closing,
            pos,
        }
    };
    (event, end)
}

pub(crate) fn decode_entities(raw: &str) -> String {
    if !raw.contains('&') {
        return raw.to_string();
    }
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        if c != '&' {
            out.push(c);
            continue;
        }
        let rest = &raw[start + 1..];
        let semi = rest.char_indices().take(12).find(|(_, ch)| *ch == ';');
        let Some((semi_off, _)) = semi else {
            out.push('&');
            continue;
        };
        let entity = &rest[..semi_off];
        let replacement = match entity {
            "amp" => Some('&'),
            "lt" => Some('<'),
            "gt" => Some('>'),
            "quot" => Some('"'),
            "apos" => Some('\''),
            "nbsp" => Some(' '),
            _ => {
                if let Some(num) = entity.strip_prefix("#x").or_else(|| entity.strip_prefix("#X")) {
                    u32::from_str_radix(num, 16).ok().and_then(char::from_u32)
                } else if let Some(num) = entity.strip_prefix('#') {
                    num.parse::<u32>().ok().and_then(char::from_u32)
                } else {
                    None
                }
            }
        };
        match replacement {
            Some(ch) => {
                out.push(ch);
                // consume up to and including the semicolon
                while let Some((idx, _)) = chars.peek() {
                    if *idx <= start + semi_off + 1 {
                        chars.next();
                    } else {
                        break;
                    }
                }
            }
            None => out.push('&'),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scans_simple_markup() {
        let events = scan("<h1>Title</h1><p>Body text</p>");
        assert_eq!(events.len(), 6);
        assert!(matches!(&events[0], Event::Open { name, .. } if name == "h1"));
        assert!(matches!(&events[1], Event::Text { decoded, .. } if decoded == "Title"));
        assert!(matches!(&events[2], Event::Close { name, .. } if name == "h1"));
    }

    #[test]
    fn parses_href_attribute() {
        let events = scan(r#"<a href="/reference/android/view/View.html">View</a>"#);
        match &events[0] {
            Event::Open { name, attrs, .. } => {
                assert_eq!(name, "a");
                assert_eq!(attrs[0].0, "href");
                assert_eq!(attrs[0].1, "/reference/android/view/View.html");
            }
            other => panic!("unexpected event {other:?}"),
        }
    }

    #[test]
    fn decodes_entities() {
        assert_eq!(decode_entities("a &amp; b &lt;c&gt;"), "a & b <c>");
        assert_eq!(decode_entities("&#65;&#x42;"), "AB");
        assert_eq!(decode_entities("no entities"), "no entities");
        assert_eq!(decode_entities("&bogus; stays"), "&bogus; stays");
    }

    #[test]
    fn skips_comments_and_scripts() {
        let events = scan("<p>a</p><!-- hidden --><script>var x = '<p>';</script><p>b</p>");
        let text: Vec<&str> = events
            .iter()
            .filter_map(|e| match e {
                Event::Text { decoded, .. } => Some(decoded.as_str()),
                _ => None,
            })
            .collect();
        assert_eq!(text, vec!["a", "b"]);
    }

    #[test]
    fn self_closing_tag() {
        let events = scan("x<br/>y");
        assert!(matches!(
            &events[1],
            Event::Open { name, self_closing: true, .. } if name == "br"
        ));
    }
}
