class Asserts {
    void check(int x) {
        assert x >= 0;
        assert x < 100 : "too big";
    }
}
