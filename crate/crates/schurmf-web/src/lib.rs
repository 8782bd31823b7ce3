use schurmf::groups::{
    is_induced_mf_with, plethysm_dispatch, Caps, GroupDescriptor, IrredCharDescriptor,
};
use schurmf::lr::lr_coefficient;
use schurmf::Partition;
use wasm_bindgen::prelude::*;

// A browser tab should answer in well under a second.
const CAPS: Caps = Caps {
    combinatorial: 24,
    oracle: 14,
};

fn partition(field: &str, text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e| format!("{field}: {e}"))
}

pub fn lr_text(mu: &str, nu: &str, lambda: &str) -> Result<String, String> {
    let (mu, nu, lambda) = (
        partition("μ", mu)?,
        partition("ν", nu)?,
        partition("λ", lambda)?,
    );
    if lambda.size() > CAPS.combinatorial {
        return Err(format!(
            "|λ| = {} is above the demo cap {}",
            lambda.size(),
            CAPS.combinatorial
        ));
    }
    Ok(lr_coefficient(&mu, &nu, &lambda).to_string())
}

pub fn plethysm_text(inner: &str, outer: &str) -> Result<String, String> {
    let (inner, outer) = (partition("inner", inner)?, partition("outer", outer)?);
    let x = plethysm_dispatch(&inner, &outer, &CAPS).map_err(|e| e.to_string())?;
    let mf = x.is_multiplicity_free().map_err(|e| e.to_string())?;
    Ok(format!("{}\n\nmultiplicity-free: {mf}", x.render()))
}

/// `group` and `character` use the JSON descriptors of the `schurmf` CLI.
pub fn induced_mf_text(group: &str, character: &str) -> Result<String, String> {
    let g: GroupDescriptor = serde_json::from_str(group).map_err(|e| format!("group: {e}"))?;
    let rho: IrredCharDescriptor =
        serde_json::from_str(character).map_err(|e| format!("character: {e}"))?;
    let v = is_induced_mf_with(&g, &rho, &CAPS).map_err(|e| e.to_string())?;
    Ok(match v.witness {
        Some(w) if !v.verdict => {
            format!("{rho} induced from {g} is not multiplicity-free: s{w} appears at least twice")
        }
        _ => format!("{rho} induced from {g} is multiplicity-free"),
    })
}

#[wasm_bindgen]
pub fn lr(mu: &str, nu: &str, lambda: &str) -> Result<String, JsError> {
    lr_text(mu, nu, lambda).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn plethysm(inner: &str, outer: &str) -> Result<String, JsError> {
    plethysm_text(inner, outer).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn induced_mf(group: &str, character: &str) -> Result<String, JsError> {
    induced_mf_text(group, character).map_err(|e| JsError::new(&e))
}
