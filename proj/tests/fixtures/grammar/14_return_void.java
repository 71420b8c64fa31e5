class Voidy {
    void maybe(boolean flag) {
        if (flag) {
            return;
        }
    }
}
