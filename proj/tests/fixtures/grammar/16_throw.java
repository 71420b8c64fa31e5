class Throws {
    void reject(int x) {
        if (x < 0) {
            throw new IllegalArgumentException("negative");
        }
    }
}
