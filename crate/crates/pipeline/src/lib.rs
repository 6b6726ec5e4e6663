pub fn placeholder() -> f64 {
    egobody_core::placeholder()
}
