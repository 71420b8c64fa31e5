class Primitives {
    void all() {
        boolean b = true;
        byte y = 1;
        char c = 'x';
        short s = 2;
        int i = 3;
        long l = 4L;
        float f = 1.5f;
        double d = 2.5;
    }
}
