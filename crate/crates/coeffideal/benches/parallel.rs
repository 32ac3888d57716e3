fn main() {
    // populated once the engine modules land
}
