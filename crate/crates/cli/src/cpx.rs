//! Command-line complex number grammar `RE[+-IMi]` (no spaces) and the fixed
//! 17-significant-digit float formatting that keeps all output byte-stable.

use polar_jacobi_core::Complex64;

/// Parses `RE` or `RE+IMi` / `RE-IMi`, e.g. `1.5`, `-0.5+1i`, `-1.45-0.5i`.
pub fn parse_c64(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // split at the sign of the imaginary part: the last +/- that is not
        // the leading sign and not an exponent sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| {
                (bytes[i] == b'+' || bytes[i] == b'-')
                    && !matches!(bytes[i - 1], b'e' | b'E')
            })
            .ok_or_else(|| format!("`{t}`: expected RE+IMi or RE-IMi"))?;
        let re: f64 = body[..split]
            .parse()
            .map_err(|_| format!("`{t}`: bad real part `{}`", &body[..split]))?;
        let im: f64 = body[split..]
            .parse()
            .map_err(|_| format!("`{t}`: bad imaginary part `{}`", &body[split..]))?;
        if !re.is_finite() || !im.is_finite() {
            return Err(format!("`{t}`: non-finite component"));
        }
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = t.parse().map_err(|_| format!("`{t}`: bad real number"))?;
        if !re.is_finite() {
            return Err(format!("`{t}`: non-finite value"));
        }
        Ok(Complex64::new(re, 0.0))
    }
}

/// 17 significant digits in scientific notation; `-0` normalized to `0`.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// A complex value as the two-element JSON array `[re, im]`.
pub fn fmt_pair(z: Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}
