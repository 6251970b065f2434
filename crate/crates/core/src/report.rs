use std::fmt;

/// Outcome of a verification sweep: how many checks ran and which failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn fail(&mut self, detail: String) {
        self.checks += 1;
        self.failures.push(detail);
    }

    /// Records an error from a fallible step as a failure.
    pub fn absorb<T>(&mut self, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(err) => {
                self.fail(err.to_string());
                None
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures
            .extend(other.failures.into_iter().map(|f| format!("{}: {f}", other.name)));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} checks, {} failures)",
            self.name,
            self.checks,
            self.failures.len()
        )?;
        for line in self.failures.iter().take(20) {
            write!(f, "\n  {line}")?;
        }
        if self.failures.len() > 20 {
            write!(f, "\n  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}
