use glam::{DMat3, DVec3};

/// Number of occlusion ray directions per pixel.
pub const DIRECTION_COUNT: usize = 62;

const RING_COUNT: usize = 5;
const AZIMUTH_COUNT: usize = 12;
const RING_THETA_DEG: [f64; RING_COUNT] = [30.0, 60.0, 90.0, 120.0, 150.0];

/// The canonical 62-direction fan, defined in the camera's local frame.
///
/// Layout: index 0 is the pole along local +z; indices `1 + 12r + a` walk
/// five polar rings at 30° steps (theta 30..150, outer order) with twelve
/// azimuths at 30° steps (phi 0..330, inner order); index 61 is the -z pole.
/// The set is exactly antipodally symmetric: lower-hemisphere entries are
/// stored as the negation of their upper partner, so the vector sum is zero
/// by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectionSet {
    dirs: [DVec3; DIRECTION_COUNT],
}

impl DirectionSet {
    pub fn canonical() -> DirectionSet {
        let mut dirs = [DVec3::ZERO; DIRECTION_COUNT];
        let mut filled = [false; DIRECTION_COUNT];

        let mut place = |index: usize, v: DVec3, filled: &mut [bool; DIRECTION_COUNT], dirs: &mut [DVec3; DIRECTION_COUNT]| {
            dirs[index] = v;
            filled[index] = true;
            let anti = Self::antipode_index(index);
            if !filled[anti] {
                dirs[anti] = -v;
                filled[anti] = true;
            }
        };

        place(0, DVec3::Z, &mut filled, &mut dirs);
        for (ring, &theta_deg) in RING_THETA_DEG.iter().enumerate() {
            let (sin_theta, cos_theta) = theta_deg.to_radians().sin_cos();
            for azimuth in 0..AZIMUTH_COUNT {
                let index = Self::ring_index(ring, azimuth);
                if filled[index] {
                    continue;
                }
                let phi = (azimuth as f64 * 30.0).to_radians();
                let v = DVec3::new(
                    sin_theta * phi.cos(),
                    sin_theta * phi.sin(),
                    cos_theta,
                );
                place(index, v, &mut filled, &mut dirs);
            }
        }
        debug_assert!(filled.iter().all(|&f| f));
        DirectionSet { dirs }
    }

    /// Index of the entry on polar ring `ring` (0..5) at azimuth step
    /// `azimuth` (0..12).
    pub fn ring_index(ring: usize, azimuth: usize) -> usize {
        1 + ring * AZIMUTH_COUNT + azimuth
    }

    /// Index holding the exact negation of direction `index`: poles swap,
    /// rings mirror (theta -> 180° - theta) with the azimuth advanced 180°.
    pub fn antipode_index(index: usize) -> usize {
        match index {
            0 => DIRECTION_COUNT - 1,
            i if i == DIRECTION_COUNT - 1 => 0,
            i => {
                let ring = (i - 1) / AZIMUTH_COUNT;
                let azimuth = (i - 1) % AZIMUTH_COUNT;
                Self::ring_index(RING_COUNT - 1 - ring, (azimuth + 6) % AZIMUTH_COUNT)
            }
        }
    }

    pub fn directions(&self) -> &[DVec3; DIRECTION_COUNT] {
        &self.dirs
    }

    pub fn get(&self, index: usize) -> DVec3 {
        self.dirs[index]
    }

    /// The fan carried into world space by a camera rotation. Translation
    /// never applies; directions live in the camera frame.
    pub fn rotated(&self, rotation: &DMat3) -> [DVec3; DIRECTION_COUNT] {
        let mut out = [DVec3::ZERO; DIRECTION_COUNT];
        for (slot, dir) in out.iter_mut().zip(self.dirs.iter()) {
            *slot = *rotation * *dir;
        }
        out
    }
}
