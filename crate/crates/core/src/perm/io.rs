use serde::{Deserialize, Serialize};

use super::{PermError, PermGroup, Permutation};

/// On-disk group description: `{ "degree": n, "generators": [...] }`.
///
/// Each generator is either an image list or a cycle-notation string such
/// as `"(0 1 2)(3 4)"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Images(Vec<usize>),
    Cycles(String),
}

impl GroupSpec {
    pub fn from_group(group: &PermGroup) -> Self {
        GroupSpec {
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| GeneratorSpec::Images(g.to_images()))
                .collect(),
        }
    }

    pub fn parse_json(text: &str) -> Result<Self, PermError> {
        serde_json::from_str(text).map_err(|e| PermError::MalformedPermutation(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group specs always serialize")
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>, PermError> {
        self.generators
            .iter()
            .map(|g| match g {
                GeneratorSpec::Images(images) => {
                    if images.len() != self.degree {
                        return Err(PermError::MixedDegree(self.degree, images.len()));
                    }
                    Permutation::from_images(images.clone())
                }
                GeneratorSpec::Cycles(text) => Permutation::from_cycles(self.degree, text),
            })
            .collect()
    }

    pub fn build(&self) -> Result<PermGroup, PermError> {
        PermGroup::new(self.degree, self.permutations()?)
    }
}
