class Access {
    double circle(double r) {
        double area = Math.PI * r * r;
        return area;
    }
}
