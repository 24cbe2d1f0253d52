int main(void)
{
    float f;
    f = 0.1f;
    f = f + 0.2f;
    return f > 0.3f;
}
