fn main() {
    println!("{}", egobody_pipeline::placeholder());
}
