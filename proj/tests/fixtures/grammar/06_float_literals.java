class FloatLits {
    void lits() {
        float a = 3.25f;
        double b = 0.125;
        double c = 1.0e10;
        double whole = 5.0;
    }
}
