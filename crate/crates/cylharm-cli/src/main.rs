fn main() {
    println!("cylharm");
}
